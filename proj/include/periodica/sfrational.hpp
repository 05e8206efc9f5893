#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "periodica/error.hpp"
#include "periodica/polynomial.hpp"
#include "periodica/tropical.hpp"

namespace periodica {

/// Subtraction-free rational function num/den with positive integer
/// coefficients. Canonical form removes the common monomial factor and the
/// joint integer content; no polynomial gcd is attempted.
class SFRational {
 public:
  SFRational() : num_(1L), den_(1L) {}
  SFRational(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero() || den_.is_zero()) throw InvalidArgument("subtraction-free rational with zero part");
    if (!num_.all_coefficients_positive() || !den_.all_coefficients_positive())
      throw InvalidArgument("subtraction-free rational needs positive coefficients");
    canonicalize();
  }
  explicit SFRational(Polynomial num) : SFRational(std::move(num), Polynomial(1L)) {}

  static SFRational one() { return {}; }
  static SFRational variable(int var, int exp = 1) { return SFRational(Polynomial(Monomial::variable(var, exp))); }
  static SFRational constant(long c) { return SFRational(Polynomial(c)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  friend SFRational operator+(const SFRational& a, const SFRational& b) {
    if (a.den_ == b.den_) return SFRational(a.num_ + b.num_, a.den_);
    return SFRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend SFRational operator*(const SFRational& a, const SFRational& b) {
    return SFRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend SFRational operator/(const SFRational& a, const SFRational& b) {
    return SFRational(a.num_ * b.den_, a.den_ * b.num_);
  }
  SFRational inverse() const { return SFRational(den_, num_); }

  SFRational pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    return SFRational(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  }

  /// Equality in the fraction field, by cross-multiplication.
  friend bool operator==(const SFRational& a, const SFRational& b) {
    if (a.num_ == b.num_ && a.den_ == b.den_) return true;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  bool structurally_equal(const SFRational& o) const { return num_ == o.num_ && den_ == o.den_; }

  double evaluate(std::span<const double> point) const { return num_.evaluate(point) / den_.evaluate(point); }

  std::size_t term_count() const { return num_.term_count() + den_.term_count(); }

 private:
  void canonicalize() {
    if (num_ == den_) {
      num_ = den_ = Polynomial(1L);
      return;
    }
    const Monomial m = Monomial::min(num_.monomial_content(), den_.monomial_content());
    if (!m.is_one()) {
      num_ = num_.times_term(m.inverse(), 1);
      den_ = den_.times_term(m.inverse(), 1);
    }
    BigInt g = gcd(num_.content(), den_.content());
    if (g != 1) {
      num_ = num_.divided_by_integer(g);
      den_ = den_.divided_by_integer(g);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

inline SFRational sfr_add(const SFRational& a, const SFRational& b) { return a + b; }
inline SFRational sfr_mul(const SFRational& a, const SFRational& b) { return a * b; }
inline SFRational sfr_div(const SFRational& a, const SFRational& b) { return a / b; }
inline bool sfr_eq(const SFRational& a, const SFRational& b) { return a == b; }

/// Componentwise minimum exponent of a polynomial over variables
/// [offset, offset + n).
inline TropMonomial trop_min(const Polynomial& p, std::size_t n, int offset = 0) {
  std::vector<mpz_class> e(n, mpz_class(0));
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::vector<mpz_class> cur(n, mpz_class(0));
    for (const auto& [v, x] : m.entries()) {
      const int k = v - offset;
      if (k >= 0 && k < static_cast<int>(n)) cur[static_cast<std::size_t>(k)] = x;
    }
    if (first) {
      e = cur;
      first = false;
    } else {
      for (std::size_t i = 0; i < n; ++i)
        if (cur[i] < e[i]) e[i] = cur[i];
    }
  }
  return TropMonomial(std::move(e));
}

/// Tropical evaluation: min over numerator exponents minus min over
/// denominator exponents.
inline TropMonomial trop_evaluate(const SFRational& a, std::size_t n, int offset = 0) {
  return trop_min(a.num(), n, offset) / trop_min(a.den(), n, offset);
}

inline TropMonomial trop_oplus(const TropMonomial& a, const TropMonomial& b) { return oplus(a, b); }

}  // namespace periodica
