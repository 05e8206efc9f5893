#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "periodica/error.hpp"
#include "periodica/exchange_matrix.hpp"
#include "periodica/polynomial.hpp"
#include "periodica/tropical.hpp"

namespace periodica {

/// How F-polynomials are carried along: exactly, modulo total degree above
/// a bound (power series), or not at all.
enum class FTracking { Full, Truncated, Off };

/// Seed with principal coefficients tracked through c-vectors (columns of
/// C), g-vectors (columns of G) and optionally F-polynomials in y_0..y_{n-1}.
class PrincipalSeed {
 public:
  PrincipalSeed() = default;
  explicit PrincipalSeed(ExchangeMatrix b, bool track_f = true)
      : PrincipalSeed(std::move(b), track_f ? FTracking::Full : FTracking::Off) {}
  PrincipalSeed(ExchangeMatrix b, FTracking mode, int degree_bound = 6)
      : b_(b), b0_(std::move(b)), c_(IntMatrix::identity(b0_.n())), g_(IntMatrix::identity(b0_.n())),
        mode_(mode), degree_bound_(degree_bound) {
    if (mode_ != FTracking::Off) f_.assign(b0_.n(), Polynomial(1L));
  }

  std::size_t n() const { return b_.n(); }
  const ExchangeMatrix& b() const { return b_; }
  const ExchangeMatrix& initial_b() const { return b0_; }
  const IntMatrix& c() const { return c_; }
  const IntMatrix& g() const { return g_; }
  const std::vector<Polynomial>& f() const { return f_; }
  bool tracks_f() const { return mode_ == FTracking::Full; }
  FTracking f_mode() const { return mode_; }
  const std::vector<int>& history() const { return history_; }

  TropMonomial c_vector(std::size_t k) const { return TropMonomial(c_.column(k)); }

  PrincipalSeed mutate(std::size_t k) const {
    PrincipalSeed s = *this;
    s.mutate_in_place(k);
    return s;
  }

  void mutate_in_place(std::size_t k) {
    b_.check_index(k);
    const std::size_t n = this->n();

    if (mode_ != FTracking::Off) {
      Monomial plus_mono, minus_mono;
      for (std::size_t p = 0; p < n; ++p) {
        const Int& c = c_(p, k);
        if (c > 0) plus_mono = plus_mono * Monomial::variable(static_cast<int>(p), exponent(c));
        if (c < 0) minus_mono = minus_mono * Monomial::variable(static_cast<int>(p), exponent(Int(-c)));
      }
      Polynomial plus = trunc(Polynomial(plus_mono)), minus = trunc(Polynomial(minus_mono));
      for (std::size_t j = 0; j < n; ++j) {
        const Int& bjk = b_(j, k);
        if (bjk > 0) plus = trunc(plus * fpow(f_[j], bjk));
        if (bjk < 0) minus = trunc(minus * fpow(f_[j], Int(-bjk)));
      }
      if (mode_ == FTracking::Full) {
        auto q = (plus + minus).divide_exact(f_[k]);
        if (!q) throw IntegrityError("F-polynomial recursion produced a non-exact division at index " + std::to_string(k + 1));
        f_[k] = std::move(*q);
      } else {
        f_[k] = (plus.truncated(degree_bound_) + minus.truncated(degree_bound_)).series_divide(f_[k], degree_bound_);
      }
    }

    IntMatrix g = g_;
    for (std::size_t i = 0; i < n; ++i) {
      Int v = -g_(i, k);
      for (std::size_t p = 0; p < n; ++p) {
        if (b_(p, k) > 0) v += g_(i, p) * b_(p, k);
        if (c_(p, k) > 0) v -= b0_(i, p) * c_(p, k);
      }
      g(i, k) = std::move(v);
    }

    IntMatrix c = c_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) {
          c(i, j) = -c_(i, k);
        } else {
          const Int& cik = c_(i, k);
          const Int& bkj = b_(k, j);
          if (cik != 0 && bkj != 0) c(i, j) += Int(abs(cik) * bkj + cik * abs(bkj)) / 2;
        }
      }

    c_ = std::move(c);
    g_ = std::move(g);
    b_ = b_.mutate(k);
    history_.push_back(static_cast<int>(k));
    if (b0_.is_skew_symmetric()) validate(k);
  }

  PrincipalSeed apply(std::span<const int> seq) const {
    PrincipalSeed s = *this;
    for (int k : seq) s.mutate_in_place(static_cast<std::size_t>(k));
    return s;
  }

  Polynomial trunc(Polynomial p) const { return mode_ == FTracking::Truncated ? p.truncated(degree_bound_) : p; }

  Polynomial fpow(const Polynomial& f, Int e) const {
    if (mode_ == FTracking::Full) return f.pow(static_cast<unsigned>(exponent(e)));
    Polynomial r(1L), base = f;
    while (e != 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = trunc(r * base);
      e /= 2;
      if (e != 0) base = trunc(base * base);
    }
    return r;
  }

  /// Exponent for an F-polynomial monomial. In truncated mode anything past
  /// the degree bound is dropped anyway, so it is clamped.
  int exponent(const Int& e) const {
    if (mode_ == FTracking::Truncated && e > degree_bound_) return degree_bound_ + 1;
    return to_int(e, "F-polynomial exponent");
  }

  /// C^T G = I and sign-pure nonzero c-columns; throws on violation.
  void validate(std::size_t last) const {
    if (!(c_.transpose() * g_ == IntMatrix::identity(n())))
      throw IntegrityError("C^T G != I after mutation at " + std::to_string(last + 1));
    for (std::size_t j = 0; j < n(); ++j)
      if (c_vector(j).sign() == 0)
        throw IntegrityError("c-vector " + std::to_string(j + 1) + " is not sign-pure after mutation at " +
                             std::to_string(last + 1));
  }

  friend bool operator==(const PrincipalSeed& a, const PrincipalSeed& b) {
    return a.b_ == b.b_ && a.c_ == b.c_ && a.g_ == b.g_ && a.f_ == b.f_;
  }

 private:
  ExchangeMatrix b_;
  ExchangeMatrix b0_;
  IntMatrix c_;
  IntMatrix g_;
  std::vector<Polynomial> f_;
  FTracking mode_ = FTracking::Full;
  int degree_bound_ = 6;
  std::vector<int> history_;
};

/// Outcome of testing sign coherence of c-vectors and g-vectors and the
/// constant terms of F-polynomials.
struct PositivityReport {
  bool c_sign_pure = true;
  bool g_rows_coherent = true;
  bool f_constant_one = true;
  bool hard = true;  ///< failures are errors (skew-symmetric) rather than warnings
  std::vector<std::string> messages;
  bool ok() const { return c_sign_pure && g_rows_coherent && f_constant_one; }
};

inline PositivityReport check_positivity_assertions(const PrincipalSeed& s) {
  PositivityReport r;
  r.hard = s.initial_b().is_skew_symmetric();
  const std::size_t n = s.n();
  for (std::size_t j = 0; j < n; ++j)
    if (s.c_vector(j).sign() == 0) {
      r.c_sign_pure = false;
      r.messages.push_back("c-vector " + std::to_string(j + 1) + " is zero or has mixed signs");
    }
  for (std::size_t i = 0; i < n; ++i) {
    bool pos = false, neg = false;
    for (std::size_t j = 0; j < n; ++j) {
      pos |= s.g()(i, j) > 0;
      neg |= s.g()(i, j) < 0;
    }
    if (pos && neg) {
      r.g_rows_coherent = false;
      r.messages.push_back("g-matrix row " + std::to_string(i + 1) + " has mixed signs");
    }
  }
  for (std::size_t j = 0; j < s.f().size(); ++j)
    if (s.f()[j].constant_term() != 1) {
      r.f_constant_one = false;
      r.messages.push_back("F-polynomial " + std::to_string(j + 1) + " has constant term != 1");
    }
  if (r.hard && !r.ok()) {
    std::string msg = "positivity assertion failed:";
    for (const auto& m : r.messages) msg += " " + m + ";";
    throw IntegrityError(msg);
  }
  return r;
}

}  // namespace periodica
