#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "periodica/error.hpp"
#include "periodica/exchange_matrix.hpp"
#include "periodica/principal_seed.hpp"
#include "periodica/sfrational.hpp"

namespace periodica {

/// Growing list of primitive positive polynomials used as a factor base.
/// References stay valid while atoms are appended.
class AtomTable {
 public:
  std::size_t size() const {
    std::lock_guard lock(mu_);
    return atoms_.size();
  }
  const Polynomial& operator[](std::size_t i) const {
    std::lock_guard lock(mu_);
    return atoms_[i];
  }
  std::size_t add(Polynomial p) {
    std::lock_guard lock(mu_);
    atoms_.push_back(std::move(p));
    return atoms_.size() - 1;
  }

 private:
  mutable std::mutex mu_;
  std::deque<Polynomial> atoms_;
};

/// Element of the universal semifield kept as
/// (cnum/cden) * monomial * prod atom_a^e_a.
/// Products never expand; sums expand only the cofactors after pulling out
/// the common part and refactor the result against the atom table.
class Factored {
 public:
  using Exps = std::map<std::size_t, int>;

  explicit Factored(std::shared_ptr<AtomTable> table) : table_(std::move(table)) {}
  Factored(std::shared_ptr<AtomTable> table, Monomial m) : table_(std::move(table)), mono_(std::move(m)) {}

  const Monomial& monomial() const { return mono_; }
  const Exps& atoms() const { return exps_; }
  const std::shared_ptr<AtomTable>& table() const { return table_; }

  Factored one() const { return Factored(table_); }

  friend Factored operator*(const Factored& a, const Factored& b) { return a.combine(b, 1); }
  friend Factored operator/(const Factored& a, const Factored& b) { return a.combine(b, -1); }

  Factored inverse() const {
    Factored r = *this;
    std::swap(r.cnum_, r.cden_);
    r.mono_ = mono_.inverse();
    for (auto& [a, e] : r.exps_) e = -e;
    return r;
  }

  Factored pow(int k) const {
    if (k == 0) return one();
    if (k < 0) return inverse().pow(-k);
    Factored r = *this;
    mpz_pow_ui(r.cnum_.get_mpz_t(), cnum_.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(r.cden_.get_mpz_t(), cden_.get_mpz_t(), static_cast<unsigned long>(k));
    r.mono_ = mono_.pow(k);
    for (auto& [a, e] : r.exps_) e *= k;
    return r;
  }

  friend Factored operator+(const Factored& a, const Factored& b) {
    Factored common(a.table_);
    common.mono_ = Monomial::min(a.mono_, b.mono_);
    common.cnum_ = gcd(a.cnum_, b.cnum_);
    common.cden_ = lcm(a.cden_, b.cden_);
    for (const auto& [i, e] : a.exps_) {
      const int f = b.exponent(i);
      if (std::min(e, f) != 0) common.exps_[i] = std::min(e, f);
    }
    for (const auto& [i, f] : b.exps_)
      if (!a.exps_.count(i) && f < 0) common.exps_[i] = f;
    const Polynomial sum = (a / common).expand_polynomial() + (b / common).expand_polynomial();
    return common * a.factor(sum);
  }

  /// Numerator and denominator as polynomials.
  std::pair<Polynomial, Polynomial> expand() const {
    Polynomial num(cnum_), den(cden_);
    Monomial mn, md;
    for (const auto& [v, e] : mono_.entries()) {
      if (e > 0) mn = mn * Monomial::variable(v, e);
      else md = md * Monomial::variable(v, -e);
    }
    num = num.times_term(mn, 1);
    den = den.times_term(md, 1);
    for (const auto& [i, e] : exps_) {
      if (e > 0) num = num * (*table_)[i].pow(static_cast<unsigned>(e));
      else den = den * (*table_)[i].pow(static_cast<unsigned>(-e));
    }
    return {std::move(num), std::move(den)};
  }

  SFRational to_sfrational() const {
    auto [n, d] = expand();
    return SFRational(std::move(n), std::move(d));
  }

  bool is_one() const { return cnum_ == 1 && cden_ == 1 && mono_.is_one() && exps_.empty(); }

  friend bool operator==(const Factored& a, const Factored& b) {
    const Factored q = a / b;
    if (q.is_one()) return true;
    auto [n, d] = q.expand();
    return n == d;
  }

  /// Writes a positive polynomial in terms of the atom table, appending the
  /// cofactor left after trial division as a new atom when nonconstant.
  Factored factor(Polynomial p) const {
    if (p.is_zero() || !p.all_coefficients_positive()) throw IntegrityError("factoring a non-positive polynomial");
    Factored r(table_);
    r.mono_ = p.monomial_content();
    if (!r.mono_.is_one()) p = p.times_term(r.mono_.inverse(), 1);
    r.cnum_ = p.content();
    if (r.cnum_ != 1) p = p.divided_by_integer(r.cnum_);
    const std::size_t count = table_->size();
    for (std::size_t i = 0; i < count && !p.is_constant(); ++i) {
      const Polynomial& atom = (*table_)[i];
      if (atom.term_count() > p.term_count()) continue;
      while (true) {
        auto q = p.divide_exact(atom);
        if (!q) break;
        p = std::move(*q);
        ++r.exps_[i];
        if (p.is_constant()) break;
      }
    }
    if (!p.is_constant()) r.exps_[table_->add(std::move(p))] = 1;
    return r;
  }

 private:
  int exponent(std::size_t i) const {
    auto it = exps_.find(i);
    return it == exps_.end() ? 0 : it->second;
  }

  Polynomial expand_polynomial() const {
    auto [n, d] = expand();
    if (d != Polynomial(1L)) throw IntegrityError("cofactor expansion left a denominator");
    return n;
  }

  Factored combine(const Factored& o, int sign) const {
    Factored r = *this;
    if (sign > 0) {
      r.cnum_ *= o.cnum_;
      r.cden_ *= o.cden_;
      r.mono_ = mono_ * o.mono_;
    } else {
      r.cnum_ *= o.cden_;
      r.cden_ *= o.cnum_;
      r.mono_ = mono_ / o.mono_;
    }
    const BigInt g = gcd(r.cnum_, r.cden_);
    if (g != 1) {
      r.cnum_ /= g;
      r.cden_ /= g;
    }
    for (const auto& [i, e] : o.exps_) {
      int& x = r.exps_[i];
      x += sign * e;
      if (x == 0) r.exps_.erase(i);
    }
    return r;
  }

  std::shared_ptr<AtomTable> table_;
  BigInt cnum_ = 1;
  BigInt cden_ = 1;
  Monomial mono_;
  Exps exps_;
};

/// Seed (B, x, y) over the universal semifield. Variables: x_j is variable j,
/// y_j is variable n + j.
class SymbolicSeed {
 public:
  explicit SymbolicSeed(ExchangeMatrix b) : b_(std::move(b)) {
    auto table = std::make_shared<AtomTable>();
    const int n = static_cast<int>(b_.n());
    for (int j = 0; j < n; ++j) {
      x_.emplace_back(table, Monomial::variable(j));
      y_.emplace_back(table, Monomial::variable(n + j));
    }
  }

  std::size_t n() const { return b_.n(); }
  const ExchangeMatrix& b() const { return b_; }
  const std::vector<Factored>& x() const { return x_; }
  const std::vector<Factored>& y() const { return y_; }
  const std::vector<int>& history() const { return history_; }

  SymbolicSeed mutate(std::size_t k) const {
    SymbolicSeed s = *this;
    s.mutate_in_place(k);
    return s;
  }

  void mutate_in_place(std::size_t k) {
    b_.check_index(k);
    const std::size_t n = this->n();
    const Factored one = y_[k].one();
    const Factored yk = y_[k];
    const Factored one_plus_yk = one + yk;

    Factored plus = yk, minus = one;
    for (std::size_t j = 0; j < n; ++j) {
      const int bjk = to_int(b_(j, k));
      if (bjk > 0) plus = plus * x_[j].pow(bjk);
      if (bjk < 0) minus = minus * x_[j].pow(-bjk);
    }
    x_[k] = (plus + minus) / (one_plus_yk * x_[k]);

    const Factored one_plus_inv = one + yk.inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const int bki = to_int(b_(k, i));
      if (bki > 0) y_[i] = y_[i] * one_plus_inv.pow(-bki);
      if (bki < 0) y_[i] = y_[i] * one_plus_yk.pow(-bki);
    }
    y_[k] = yk.inverse();
    b_ = b_.mutate(k);
    history_.push_back(static_cast<int>(k));
  }

  SymbolicSeed apply(std::span<const int> seq) const {
    SymbolicSeed s = *this;
    for (int k : seq) s.mutate_in_place(static_cast<std::size_t>(k));
    return s;
  }

 private:
  ExchangeMatrix b_;
  std::vector<Factored> x_;
  std::vector<Factored> y_;
  std::vector<int> history_;
};

/// Coefficient mutation on plain subtraction-free rationals.
inline std::vector<SFRational> mutate_coeffs(const std::vector<SFRational>& y, const ExchangeMatrix& b, std::size_t k) {
  b.check_index(k);
  std::vector<SFRational> r = y;
  const SFRational one = SFRational::one();
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i == k) continue;
    const int bki = to_int(b(k, i));
    if (bki > 0) r[i] = y[i] * (one + y[k].inverse()).pow(-bki);
    if (bki < 0) r[i] = y[i] * (one + y[k]).pow(-bki);
  }
  r[k] = y[k].inverse();
  return r;
}

/// Cluster mutation on plain subtraction-free rationals.
inline std::vector<SFRational> mutate_cluster(const std::vector<SFRational>& x, const std::vector<SFRational>& y,
                                              const ExchangeMatrix& b, std::size_t k) {
  b.check_index(k);
  SFRational plus = y[k], minus = SFRational::one();
  for (std::size_t j = 0; j < x.size(); ++j) {
    const int bjk = to_int(b(j, k));
    if (bjk > 0) plus = plus * x[j].pow(bjk);
    if (bjk < 0) minus = minus * x[j].pow(-bjk);
  }
  std::vector<SFRational> r = x;
  r[k] = (plus + minus) / ((SFRational::one() + y[k]) * x[k]);
  return r;
}

/// Cluster and coefficients rebuilt from (C, G, F) via the separation
/// formulas, in the joint variables of SymbolicSeed.
struct SeparatedSeed {
  std::vector<SFRational> x;
  std::vector<SFRational> y;
};

inline SeparatedSeed separation_reconstruct(const PrincipalSeed& s) {
  if (!s.tracks_f()) throw InvalidArgument("separation formulas need F-polynomials");
  const std::size_t n = s.n();
  const ExchangeMatrix& b0 = s.initial_b();
  std::vector<Monomial> y_img(n), yhat_img(n);
  for (std::size_t p = 0; p < n; ++p) {
    y_img[p] = Monomial::variable(static_cast<int>(n + p));
    Monomial m = y_img[p];
    for (std::size_t j = 0; j < n; ++j)
      if (b0(j, p) != 0) m = m * Monomial::variable(static_cast<int>(j), to_int(b0(j, p)));
    yhat_img[p] = m;
  }
  std::vector<Polynomial> fy(n), fyhat(n);
  for (std::size_t i = 0; i < n; ++i) {
    fy[i] = s.f()[i].substitute(y_img);
    fyhat[i] = s.f()[i].substitute(yhat_img);
  }
  SeparatedSeed out;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial xg, yc;
    for (std::size_t j = 0; j < n; ++j) {
      xg = xg * Monomial::variable(static_cast<int>(j), to_int(s.g()(j, i)));
      yc = yc * Monomial::variable(static_cast<int>(n + j), to_int(s.c()(j, i)));
    }
    out.x.push_back(SFRational(fyhat[i].times_term(xg, 1), fy[i]));
    SFRational yi{Polynomial(yc)};
    for (std::size_t j = 0; j < n; ++j) {
      const int e = to_int(s.b()(j, i));
      if (e != 0) yi = yi * SFRational(fy[j]).pow(e);
    }
    out.y.push_back(yi);
  }
  return out;
}

}  // namespace periodica
