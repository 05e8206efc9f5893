#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "periodica/error.hpp"

namespace periodica {

/// Laurent monomial in the tropical semifield: a dense exponent vector with
/// min as addition and vector addition as multiplication.
class TropMonomial {
 public:
  TropMonomial() = default;
  explicit TropMonomial(std::size_t n) : e_(n, mpz_class(0)) {}
  explicit TropMonomial(std::vector<mpz_class> e) : e_(std::move(e)) {}

  static TropMonomial unit(std::size_t n, std::size_t k) {
    TropMonomial t(n);
    t.e_.at(k) = 1;
    return t;
  }

  std::size_t size() const { return e_.size(); }
  const mpz_class& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<mpz_class>& exponents() const { return e_; }

  friend TropMonomial oplus(const TropMonomial& a, const TropMonomial& b) {
    return a.zip(b, [](const mpz_class& x, const mpz_class& y) { return x < y ? x : y; });
  }
  friend TropMonomial operator*(const TropMonomial& a, const TropMonomial& b) {
    return a.zip(b, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x + y); });
  }
  friend TropMonomial operator/(const TropMonomial& a, const TropMonomial& b) {
    return a.zip(b, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x - y); });
  }
  TropMonomial inverse() const {
    TropMonomial r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  TropMonomial pow(const mpz_class& k) const {
    TropMonomial r = *this;
    for (auto& x : r.e_) x *= k;
    return r;
  }

  bool is_one() const { return std::all_of(e_.begin(), e_.end(), [](const mpz_class& x) { return x == 0; }); }

  /// +1 when nonzero and all exponents >= 0, -1 when nonzero and all <= 0,
  /// 0 otherwise (the zero vector or a mixed-sign vector).
  int sign() const {
    bool pos = false, neg = false;
    for (const mpz_class& x : e_) {
      pos |= x > 0;
      neg |= x < 0;
    }
    if (pos == neg) return 0;
    return pos ? 1 : -1;
  }

  friend bool operator==(const TropMonomial&, const TropMonomial&) = default;

 private:
  template <typename Op>
  TropMonomial zip(const TropMonomial& o, Op op) const {
    if (e_.size() != o.e_.size()) throw InvalidArgument("tropical monomials over different index sets");
    TropMonomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = op(e_[i], o.e_[i]);
    return r;
  }

  std::vector<mpz_class> e_;
};

}  // namespace periodica
