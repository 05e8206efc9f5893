#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "periodica/error.hpp"
#include "periodica/monomial.hpp"

namespace periodica {

using BigInt = mpz_class;

/// Process-wide cap on the number of terms any polynomial may hold.
inline std::atomic<std::size_t>& term_cap() {
  static std::atomic<std::size_t> cap{1'000'000};
  return cap;
}

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  Polynomial() = default;
  Polynomial(long c) { if (c != 0) terms_.emplace(Monomial{}, BigInt(c)); }  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const BigInt& c) { if (c != 0) terms_.emplace(Monomial{}, c); }
  explicit Polynomial(const Monomial& m, const BigInt& c = 1) { if (c != 0) terms_.emplace(m, c); }

  static Polynomial variable(int var, int exp = 1) { return Polynomial(Monomial::variable(var, exp)); }

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  BigInt constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  BigInt coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Lex-largest term.
  const std::pair<const Monomial, BigInt>& leading() const {
    if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  bool all_coefficients_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) > 0; });
  }

  bool has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_negative_exponent(); });
  }

  void add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    check_cap();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    check_cap();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.times_term(a.terms_.begin()->first, a.terms_.begin()->second);
    if (b.terms_.size() == 1) return a.times_term(b.terms_.begin()->first, b.terms_.begin()->second);
    if (a.terms_.size() * b.terms_.size() > (std::size_t{1} << 22)) {
      // large product: accumulate row by row so the cap trips before memory does
      Polynomial r;
      for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        r.check_cap();
      }
      return r;
    }
    std::vector<std::pair<Monomial, BigInt>> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
    std::sort(prods.begin(), prods.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Polynomial r;
    for (std::size_t i = 0; i < prods.size();) {
      BigInt sum = prods[i].second;
      std::size_t j = i + 1;
      while (j < prods.size() && prods[j].first == prods[i].first) sum += prods[j++].second;
      if (sum != 0) r.terms_.emplace_hint(r.terms_.end(), std::move(prods[i].first), std::move(sum));
      i = j;
    }
    r.check_cap();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial times_term(const Monomial& m, const BigInt& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result(1L);
    Polynomial base = *this;
    while (k) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k) base *= base;
    }
    return result;
  }

  /// Positive gcd of all coefficients (0 for the zero polynomial).
  BigInt content() const {
    BigInt g = 0;
    for (const auto& [m, c] : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Componentwise minimum of all exponent vectors (absent = 0).
  Monomial monomial_content() const {
    if (terms_.empty()) return {};
    Monomial lo = terms_.begin()->first;
    for (const auto& [m, c] : terms_) lo = Monomial::min(lo, m);
    return lo;
  }

  /// Componentwise maximum of all exponent vectors (absent = 0).
  Monomial monomial_span_max() const {
    if (terms_.empty()) return {};
    Monomial hi = terms_.begin()->first;
    for (const auto& [m, c] : terms_) hi = Monomial::min(hi.inverse(), m.inverse()).inverse();  // max = -min(-a,-b)
    return hi;
  }

  Polynomial divided_by_integer(const BigInt& d) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw IntegrityError("inexact integer division");
      BigInt q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
      r.terms_.emplace_hint(r.terms_.end(), m, std::move(q));
    }
    return r;
  }

  /// Exact division by another polynomial, or nullopt when it does not
  /// divide. Both operands must be genuine polynomials (no negative
  /// exponents). Uses the lex division algorithm with Newton-box pruning.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const {
    if (g.is_zero()) throw InvalidArgument("division by zero polynomial");
    if (is_zero()) return Polynomial{};
    if (g.terms_.size() == 1) {
      const auto& [gm, gc] = *g.terms_.begin();
      Polynomial q;
      for (const auto& [m, c] : terms_) {
        Monomial qm = m / gm;
        if (qm.has_negative_exponent() && !has_negative_exponent()) return std::nullopt;
        if (!mpz_divisible_p(c.get_mpz_t(), gc.get_mpz_t())) return std::nullopt;
        BigInt qc;
        mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), gc.get_mpz_t());
        q.terms_.emplace_hint(q.terms_.end(), std::move(qm), std::move(qc));
      }
      return q;
    }
    const Monomial lo = monomial_content() / g.monomial_content();
    const Monomial hi = monomial_span_max() / g.monomial_span_max();
    const auto& [lgm, lgc] = g.leading();
    Polynomial r = *this;
    Polynomial q;
    while (!r.is_zero()) {
      const auto& [lrm, lrc] = r.leading();
      Monomial qm = lrm / lgm;
      if (!within(qm, lo, hi)) return std::nullopt;
      if (!mpz_divisible_p(lrc.get_mpz_t(), lgc.get_mpz_t())) return std::nullopt;
      BigInt qc;
      mpz_divexact(qc.get_mpz_t(), lrc.get_mpz_t(), lgc.get_mpz_t());
      r -= g.times_term(qm, qc);
      q.add_term(qm, qc);
      if (q.term_count() > term_cap().load()) throw SizeCapExceeded("quotient exceeds term cap");
    }
    return q;
  }

  /// Drops every term of total degree above d.
  Polynomial truncated(int d) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
      if (m.total_degree() <= d) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

  /// Power-series quotient modulo terms of total degree above d. The
  /// divisor needs a unit constant term.
  Polynomial series_divide(const Polynomial& den, int d) const {
    const BigInt c0 = den.constant_term();
    if (c0 != 1 && c0 != -1) throw IntegrityError("series division needs a unit constant term");
    Polynomial q, r = truncated(d);
    for (int deg = 0; deg <= d && !r.is_zero(); ++deg) {
      Polynomial t;
      for (const auto& [m, c] : r.terms_)
        if (m.total_degree() == deg) t.add_term(m, c * c0);
      if (t.is_zero()) continue;
      q += t;
      r -= (t * den).truncated(d);
    }
    return q;
  }

  /// Replaces variable v by the Laurent monomial images[v].
  Polynomial substitute(std::span<const Monomial> images) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      Monomial img;
      for (const auto& [v, e] : m.entries()) {
        if (v >= static_cast<int>(images.size())) throw InvalidArgument("substitution misses a variable");
        img = img * images[v].pow(e);
      }
      r.add_term(img, c);
    }
    r.check_cap();
    return r;
  }

  template <typename F>
  Polynomial relabel(F&& map) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m.relabel(map), c);
    return r;
  }

  double evaluate(std::span<const double> point) const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
      double t = c.get_d();
      for (const auto& [v, e] : m.entries()) t *= std::pow(point[static_cast<std::size_t>(v)], e);
      sum += t;
    }
    return sum;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  void check_cap() const {
    if (terms_.size() > term_cap().load())
      throw SizeCapExceeded("polynomial has " + std::to_string(terms_.size()) + " terms, cap is " +
                            std::to_string(term_cap().load()) + "; use principal-coefficient tracking instead");
  }

 private:
  static bool within(const Monomial& m, const Monomial& lo, const Monomial& hi) {
    return !(m / lo).has_negative_exponent() && !(hi / m).has_negative_exponent();
  }

  Terms terms_;
};

}  // namespace periodica
