#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "periodica/error.hpp"

namespace periodica {

/// Sparse Laurent monomial: sorted (variable, exponent) pairs with nonzero
/// exponents. Ordered lexicographically with variable 0 most significant,
/// which is a monomial order on the polynomial part.
class Monomial {
 public:
  using Entry = std::pair<int, int>;

  Monomial() = default;

  static Monomial variable(int var, int exp = 1) {
    Monomial m;
    if (var < 0) throw InvalidArgument("negative variable index");
    if (exp != 0) m.entries_.emplace_back(var, exp);
    return m;
  }

  static Monomial from_dense(std::span<const int> exps, int offset = 0) {
    Monomial m;
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v] != 0) m.entries_.emplace_back(static_cast<int>(v) + offset, exps[v]);
    return m;
  }

  /// Builds from arbitrary (var, exp) pairs; duplicates are summed.
  static Monomial from_pairs(std::vector<Entry> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (const auto& [v, e] : pairs) {
      if (v < 0) throw InvalidArgument("negative variable index");
      if (!m.entries_.empty() && m.entries_.back().first == v)
        m.entries_.back().second += e;
      else
        m.entries_.emplace_back(v, e);
    }
    std::erase_if(m.entries_, [](const Entry& x) { return x.second == 0; });
    return m;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  int exponent(int var) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return (it != entries_.end() && it->first == var) ? it->second : 0;
  }

  bool has_negative_exponent() const {
    return std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second < 0; });
  }

  int total_degree() const {
    int d = 0;
    for (const auto& e : entries_) d += e.second;
    return d;
  }

  Monomial operator*(const Monomial& o) const { return combine(o, [](int a, int b) { return a + b; }); }
  Monomial operator/(const Monomial& o) const { return combine(o, [](int a, int b) { return a - b; }); }

  Monomial inverse() const {
    Monomial m = *this;
    for (auto& e : m.entries_) e.second = -e.second;
    return m;
  }

  Monomial pow(int k) const {
    if (k == 0) return {};
    Monomial m = *this;
    for (auto& e : m.entries_) e.second *= k;
    return m;
  }

  /// Componentwise minimum, absent variables counting as exponent 0.
  static Monomial min(const Monomial& a, const Monomial& b) {
    return a.combine(b, [](int x, int y) { return std::min(x, y); });
  }

  /// True when every exponent of *this is <= the matching exponent of o.
  bool divides(const Monomial& o) const {
    const Monomial q = o / *this;
    return std::all_of(q.entries_.begin(), q.entries_.end(), [](const Entry& e) { return e.second > 0; });
  }

  /// Renames variables through `map` (old index -> new index).
  template <typename F>
  Monomial relabel(F&& map) const {
    std::vector<Entry> pairs;
    pairs.reserve(entries_.size());
    for (const auto& [v, e] : entries_) pairs.emplace_back(map(v), e);
    return from_pairs(std::move(pairs));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
      int ea, eb;
      if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
        ea = ia->second; eb = 0; ++ia;
      } else if (ia == a.entries_.end() || ib->first < ia->first) {
        ea = 0; eb = ib->second; ++ib;
      } else {
        ea = ia->second; eb = ib->second; ++ia; ++ib;
      }
      if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
  }

 private:
  template <typename Op>
  Monomial combine(const Monomial& o, Op op) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto ia = entries_.begin();
    auto ib = o.entries_.begin();
    while (ia != entries_.end() || ib != o.entries_.end()) {
      int v, e;
      if (ib == o.entries_.end() || (ia != entries_.end() && ia->first < ib->first)) {
        v = ia->first; e = op(ia->second, 0); ++ia;
      } else if (ia == entries_.end() || ib->first < ia->first) {
        v = ib->first; e = op(0, ib->second); ++ib;
      } else {
        v = ia->first; e = op(ia->second, ib->second); ++ia; ++ib;
      }
      if (e != 0) r.entries_.emplace_back(v, e);
    }
    return r;
  }

  std::vector<Entry> entries_;
};

}  // namespace periodica
