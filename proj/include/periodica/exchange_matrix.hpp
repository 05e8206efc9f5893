#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "periodica/error.hpp"

namespace periodica {

using Int = mpz_class;

inline Int pos_part(const Int& a) { return a > 0 ? a : Int(0); }

/// Narrowing conversion that refuses values outside the int range.
inline int to_int(const Int& a, const char* what = "integer") {
  if (!a.fits_sint_p()) throw SizeCapExceeded(std::string(what) + " does not fit a machine int");
  return static_cast<int>(a.get_si());
}
inline long long to_ll(const Int& a, const char* what = "integer") {
  if (!a.fits_slong_p()) throw SizeCapExceeded(std::string(what) + " does not fit a machine long");
  return a.get_si();
}

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, Int(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  template <typename T>
  static IntMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw InvalidArgument("matrix is not square");
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if constexpr (std::is_same_v<T, Int>) m(i, j) = rows[i][j];
        else m(i, j) = static_cast<long>(rows[i][j]);
      }
    }
    return m;
  }

  std::size_t n() const { return n_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::vector<Int> column(std::size_t j) const {
    std::vector<Int> c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<std::vector<Int>> rows() const {
    std::vector<std::vector<Int>> r(n_, std::vector<Int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
  }

  IntMatrix transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const Int& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }

  /// Result r with r(nu[i], nu[j]) = a(i, j).
  IntMatrix relabel(const std::vector<int>& nu) const {
    IntMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(static_cast<std::size_t>(nu[i]), static_cast<std::size_t>(nu[j])) = (*this)(i, j);
    return r;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> a_;
};

/// Skew-symmetrizable integer matrix together with its left symmetrizer d
/// (d_i b_ij = -d_j b_ji, coprime positive integers per connected component).
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  explicit ExchangeMatrix(IntMatrix b) : b_(std::move(b)) { d_ = compute_symmetrizer(b_); }
  ExchangeMatrix(IntMatrix b, std::vector<long long> d) : b_(std::move(b)), d_(std::move(d)) {}

  static ExchangeMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    return ExchangeMatrix(IntMatrix::from_rows(rows));
  }

  std::size_t n() const { return b_.n(); }
  const Int& operator()(std::size_t i, std::size_t j) const { return b_(i, j); }
  const IntMatrix& matrix() const { return b_; }
  const std::vector<long long>& d() const { return d_; }

  /// Right symmetrizer weights lcm(d) / d_i.
  std::vector<long long> d_tilde() const {
    long long l = 1;
    for (long long x : d_) l = std::lcm(l, x);
    std::vector<long long> r(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) r[i] = l / d_[i];
    return r;
  }

  bool is_skew_symmetric() const {
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j)
        if (b_(i, j) != -b_(j, i)) return false;
    return true;
  }

  void check_index(std::size_t k) const {
    if (k >= n()) throw InvalidArgument("index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n()));
  }

  ExchangeMatrix mutate(std::size_t k) const {
    check_index(k);
    IntMatrix r(n());
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) {
        if (i == k || j == k) {
          r(i, j) = Int(-b_(i, j));
        } else {
          const Int& bik = b_(i, k);
          const Int& bkj = b_(k, j);
          r(i, j) = b_(i, j) + Int(abs(bik) * bkj + bik * abs(bkj)) / 2;
        }
      }
    return ExchangeMatrix(std::move(r), d_);
  }

  ExchangeMatrix relabel(const std::vector<int>& nu) const {
    std::vector<long long> d(n());
    for (std::size_t i = 0; i < n(); ++i) d[static_cast<std::size_t>(nu[i])] = d_[i];
    return ExchangeMatrix(b_.relabel(nu), std::move(d));
  }

  ExchangeMatrix opposite() const {
    IntMatrix r(n());
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) r(i, j) = -b_(i, j);
    return ExchangeMatrix(std::move(r), d_);
  }

  /// Principal submatrix on the given indices (in the given order).
  ExchangeMatrix submatrix(const std::vector<int>& idx) const {
    IntMatrix r(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      check_index(static_cast<std::size_t>(idx[a]));
      for (std::size_t c = 0; c < idx.size(); ++c)
        r(a, c) = b_(static_cast<std::size_t>(idx[a]), static_cast<std::size_t>(idx[c]));
    }
    return ExchangeMatrix(std::move(r));
  }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.b_ == b.b_; }

  /// Solves d_i b_ij = -d_j b_ji by propagation over the graph of nonzero
  /// entries; throws when the matrix is not skew-symmetrizable.
  static std::vector<long long> compute_symmetrizer(const IntMatrix& b) {
    const std::size_t n = b.n();
    for (std::size_t i = 0; i < n; ++i)
      if (b(i, i) != 0) throw InvalidArgument("exchange matrix has a nonzero diagonal entry at " + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Int& x = b(i, j);
        const Int& y = b(j, i);
        if ((x == 0) != (y == 0) || (x != 0 && (x > 0) == (y > 0)))
          throw InvalidArgument("matrix is not skew-symmetrizable: sign pattern at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
      }
    std::vector<mpq_class> q(n);
    std::vector<Int> d(n);
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      std::vector<std::size_t> comp;
      std::queue<std::size_t> todo;
      todo.push(root);
      seen[root] = true;
      q[root] = 1;
      while (!todo.empty()) {
        const std::size_t i = todo.front();
        todo.pop();
        comp.push_back(i);
        for (std::size_t j = 0; j < n; ++j) {
          if (b(i, j) == 0 || seen[j]) continue;
          mpq_class ratio(b(i, j), Int(-b(j, i)));  // d_j = d_i b_ij / (-b_ji)
          ratio.canonicalize();
          q[j] = q[i] * ratio;
          seen[j] = true;
          todo.push(j);
        }
      }
      Int l = 1, g = 0;
      for (std::size_t i : comp) l = lcm(l, q[i].get_den());
      for (std::size_t i : comp) {
        d[i] = q[i].get_num() * (l / q[i].get_den());
        g = gcd(g, d[i]);
      }
      for (std::size_t i : comp) d[i] /= g;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i] * b(i, j) != -(d[j] * b(j, i)))
          throw InvalidArgument("matrix is not skew-symmetrizable: inconsistent cycle through (" + std::to_string(i + 1) +
                                "," + std::to_string(j + 1) + ")");
    std::vector<long long> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = to_ll(d[i], "symmetrizer entry");
    return out;
  }

 private:
  IntMatrix b_;
  std::vector<long long> d_;
};

/// Quiver without loops or 2-cycles: b_ij > 0 arrows from i to j.
class Quiver {
 public:
  using Arrows = std::map<std::pair<int, int>, Int>;

  Quiver() = default;
  Quiver(int n, Arrows arrows) : n_(n), arrows_(std::move(arrows)) { validate(); }

  /// Builds a quiver from a list of (tail, head, multiplicity); parallel
  /// entries add up and opposite entries cancel.
  static Quiver from_list(int n, const std::vector<std::tuple<int, int, long long>>& list) {
    std::map<std::pair<int, int>, Int> net;
    for (const auto& [i, j, m] : list) {
      if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidArgument("arrow endpoint out of range");
      if (i == j) throw InvalidArgument("quiver has a loop at vertex " + std::to_string(i + 1));
      if (i < j) net[{i, j}] += static_cast<long>(m); else net[{j, i}] -= static_cast<long>(m);
    }
    Arrows a;
    for (const auto& [p, m] : net) {
      if (m > 0) a[p] = m;
      if (m < 0) a[{p.second, p.first}] = Int(-m);
    }
    return Quiver(n, std::move(a));
  }

  static Quiver from_matrix(const ExchangeMatrix& b) {
    if (!b.is_skew_symmetric()) throw InvalidArgument("only skew-symmetric matrices correspond to quivers");
    Arrows a;
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j)
        if (b(i, j) > 0) a[{static_cast<int>(i), static_cast<int>(j)}] = b(i, j);
    return Quiver(static_cast<int>(b.n()), std::move(a));
  }

  ExchangeMatrix to_matrix() const {
    IntMatrix m(static_cast<std::size_t>(n_));
    for (const auto& [p, k] : arrows_) {
      m(static_cast<std::size_t>(p.first), static_cast<std::size_t>(p.second)) = k;
      m(static_cast<std::size_t>(p.second), static_cast<std::size_t>(p.first)) = Int(-k);
    }
    return ExchangeMatrix(std::move(m));
  }

  int n() const { return n_; }
  const Arrows& arrows() const { return arrows_; }

  /// Quiver mutation: compose paths through k, cancel 2-cycles, reverse
  /// arrows at k.
  Quiver mutate(int k) const {
    if (k < 0 || k >= n_) throw InvalidArgument("vertex out of range");
    std::map<std::pair<int, int>, Int> net;  // signed count on ordered pairs (i<j)
    auto add = [&](int i, int j, const Int& m) {
      if (i < j) net[{i, j}] += m; else net[{j, i}] -= m;
    };
    std::vector<std::pair<int, Int>> in, out;
    for (const auto& [p, m] : arrows_) {
      if (p.second == k) in.emplace_back(p.first, m);
      else if (p.first == k) out.emplace_back(p.second, m);
    }
    for (const auto& [p, m] : arrows_) {
      if (p.first == k || p.second == k) add(p.second, p.first, m);
      else add(p.first, p.second, m);
    }
    for (const auto& [i, mi] : in)
      for (const auto& [j, mj] : out) add(i, j, mi * mj);
    Arrows a;
    for (const auto& [p, m] : net) {
      if (m > 0) a[p] = m;
      if (m < 0) a[{p.second, p.first}] = Int(-m);
    }
    return Quiver(n_, std::move(a));
  }

  Quiver opposite() const {
    Arrows a;
    for (const auto& [p, m] : arrows_) a[{p.second, p.first}] = m;
    return Quiver(n_, std::move(a));
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  void validate() const {
    for (const auto& [p, m] : arrows_) {
      if (p.first < 0 || p.second < 0 || p.first >= n_ || p.second >= n_) throw InvalidArgument("arrow endpoint out of range");
      if (p.first == p.second) throw InvalidArgument("quiver has a loop");
      if (m <= 0) throw InvalidArgument("arrow multiplicity must be positive");
      if (arrows_.count({p.second, p.first})) throw InvalidArgument("quiver has a 2-cycle");
    }
  }

  int n_ = 0;
  Arrows arrows_;
};

}  // namespace periodica
