#pragma once

#include <random>
#include <vector>

#include "periodica/exchange_matrix.hpp"
#include "periodica/sfrational.hpp"

namespace testing_support {

using namespace periodica;

inline Polynomial random_positive_poly(std::mt19937_64& rng, int vars, int max_terms = 3, int lo = -1, int hi = 2) {
  std::uniform_int_distribution<int> nterms(1, max_terms), ex(lo, hi), coef(1, 3);
  Polynomial p;
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<int> e(static_cast<std::size_t>(vars));
    for (auto& x : e) x = ex(rng);
    p.add_term(Monomial::from_dense(e), coef(rng));
  }
  return p;
}

inline SFRational random_sfr(std::mt19937_64& rng, int vars = 3) {
  return SFRational(random_positive_poly(rng, vars), random_positive_poly(rng, vars));
}

/// Random skew-symmetric matrix with entries in [-max_entry, max_entry].
inline ExchangeMatrix random_skew(std::mt19937_64& rng, std::size_t n, int max_entry = 2) {
  std::uniform_int_distribution<int> ent(-max_entry, max_entry);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = ent(rng);
      m(j, i) = -m(i, j);
    }
  return ExchangeMatrix(m);
}

}  // namespace testing_support
