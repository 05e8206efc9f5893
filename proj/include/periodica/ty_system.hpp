#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "periodica/error.hpp"
#include "periodica/exchange_matrix.hpp"
#include "periodica/periodicity.hpp"
#include "periodica/sequence.hpp"

namespace periodica {

/// A point (i, u) of I x Z; i is 0-based.
using Site = std::pair<int, long>;

/// Mutation schedule of a sliced nu-period, unrolled over one window of
/// length t*g where g is the order of nu.
class SliceSchedule {
 public:
  SliceSchedule(ExchangeMatrix b, SlicedSequence slices, Permutation nu = {})
      : b0_(std::move(b)), slices_(std::move(slices)), nu_(std::move(nu)) {
    const std::size_t n = b0_.n();
    if (nu_.empty()) nu_ = identity_permutation(n);
    validate_spec({slices_.flatten(), nu_}, n);
    if (slices_.slices.empty()) throw InvalidArgument("schedule needs at least one slice");
    for (const auto& s : slices_.slices)
      if (s.empty()) throw InvalidArgument("empty slice");
    t_ = static_cast<long>(slices_.slices.size());
    g_ = permutation_order(nu_);
    gi_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t p = static_cast<std::size_t>(nu_[i]);
      int len = 1;
      while (p != i) {
        p = static_cast<std::size_t>(nu_[p]);
        ++len;
      }
      gi_[i] = len;
    }

    // unroll: slice k of copy m is nu^m(i(k)), mutated at time u = m t + k
    const long w = window();
    b_at_.reserve(static_cast<std::size_t>(w) + 1);
    b_at_.push_back(b0_);
    mutated_.assign(static_cast<std::size_t>(w), {});
    Permutation p = identity_permutation(n);
    for (long m = 0; m < g_; ++m) {
      for (long k = 0; k < t_; ++k) {
        const long u = m * t_ + k;
        const ExchangeMatrix& cur = b_at_.back();
        std::vector<int> slice;
        for (int a : slices_.slices[static_cast<std::size_t>(k)]) slice.push_back(p[static_cast<std::size_t>(a)]);
        for (std::size_t x = 0; x < slice.size(); ++x)
          for (std::size_t y = 0; y < slice.size(); ++y) {
            if (x != y && slice[x] == slice[y])
              throw InvalidArgument("slice " + std::to_string(k) + " repeats index " + std::to_string(slice[x] + 1));
            if (cur(static_cast<std::size_t>(slice[x]), static_cast<std::size_t>(slice[y])) != 0)
              throw InvalidArgument("slice condition fails at stage " + std::to_string(u) + ": b(" +
                                    std::to_string(u) + ")_{" + std::to_string(slice[x] + 1) + "," +
                                    std::to_string(slice[y] + 1) + "} != 0");
          }
        ExchangeMatrix next = cur;
        for (int a : slice) next = next.mutate(static_cast<std::size_t>(a));
        std::sort(slice.begin(), slice.end());
        mutated_[static_cast<std::size_t>(u)] = slice;
        b_at_.push_back(std::move(next));
      }
      p = compose(nu_, p);
    }
    // B(t) = nu(B) is the nu-period condition; B(tg) = B follows from it
    if (matrix_period_witness(b0_, b_at_[static_cast<std::size_t>(t_)], nu_))
      throw InvalidArgument("sequence is not a nu-period of B");

    points_.assign(n, {});
    for (long u = 0; u < w; ++u)
      for (int i : mutated_[static_cast<std::size_t>(u)]) points_[static_cast<std::size_t>(i)].push_back(u);

    // regularity: (A1) every index occurs in j(i, nu); (A2) components of i lie in distinct orbits
    in_j_.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) in_j_[i] = !points_[i].empty();
    const bool a1 = std::all_of(in_j_.begin(), in_j_.end(), [](bool x) { return x; });
    std::vector<int> orbit_of(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (orbit_of[i] >= 0) continue;
      std::size_t q = i;
      do {
        orbit_of[q] = static_cast<int>(i);
        q = static_cast<std::size_t>(nu_[q]);
      } while (q != i);
    }
    std::vector<int> seen_orbits;
    bool a2 = true;
    for (int k : slices_.flatten()) {
      const int o = orbit_of[static_cast<std::size_t>(k)];
      if (std::find(seen_orbits.begin(), seen_orbits.end(), o) != seen_orbits.end()) a2 = false;
      seen_orbits.push_back(o);
    }
    regular_ = a1 && a2;
  }

  std::size_t n() const { return b0_.n(); }
  long t() const { return t_; }
  int g() const { return g_; }
  long window() const { return t_ * g_; }
  int g_i(int i) const { return gi_[static_cast<std::size_t>(i)]; }
  const Permutation& nu() const { return nu_; }
  const SlicedSequence& slices() const { return slices_; }
  const ExchangeMatrix& initial() const { return b0_; }
  bool regular() const { return regular_; }
  bool in_j(int i) const { return in_j_[static_cast<std::size_t>(i)]; }

  /// B(u) for any integer u, using B(u + tg) = B(u).
  const ExchangeMatrix& b_at(long u) const { return b_at_[static_cast<std::size_t>(mod(u))]; }
  long b(int j, int i, long u) const { return to_ll(b_at(u)(static_cast<std::size_t>(j), static_cast<std::size_t>(i))); }

  /// Indices mutated at time u (the forward points (., u)).
  const std::vector<int>& mutated_at(long u) const { return mutated_[static_cast<std::size_t>(mod(u))]; }

  bool is_forward(int i, long u) const {
    const auto& v = mutated_at(u);
    return std::binary_search(v.begin(), v.end(), i);
  }

  /// Forward points with 0 <= u < window, ordered by (u, i).
  std::vector<Site> forward_points() const {
    std::vector<Site> out;
    for (long u = 0; u < window(); ++u)
      for (int i : mutated_[static_cast<std::size_t>(u)]) out.emplace_back(i, u);
    return out;
  }

  /// Smallest forward time of i strictly after u.
  long next_forward(int i, long u) const {
    const auto& pts = points_.at(static_cast<std::size_t>(i));
    if (pts.empty()) throw InvalidArgument("index " + std::to_string(i + 1) + " is never mutated");
    const long w = window();
    const long base = u - mod(u);
    auto it = std::upper_bound(pts.begin(), pts.end(), mod(u));
    return it == pts.end() ? base + w + pts.front() : base + *it;
  }

  /// Largest forward time of i strictly before u.
  long prev_forward(int i, long u) const {
    const auto& pts = points_.at(static_cast<std::size_t>(i));
    if (pts.empty()) throw InvalidArgument("index " + std::to_string(i + 1) + " is never mutated");
    const long w = window();
    const long base = u - mod(u);
    auto it = std::lower_bound(pts.begin(), pts.end(), mod(u));
    return it == pts.begin() ? base - w + pts.back() : base + *(it - 1);
  }

  /// Ordinal of the forward point (i, u) among all forward points of i,
  /// counted from the first one at or after time 0. Slice-independent.
  long occurrence(int i, long u) const {
    const auto& pts = points_.at(static_cast<std::size_t>(i));
    const long w = window();
    const long m = (u - mod(u)) / w;
    auto it = std::lower_bound(pts.begin(), pts.end(), mod(u));
    if (it == pts.end() || *it != mod(u)) throw InvalidArgument("not a forward mutation point");
    return m * static_cast<long>(pts.size()) + static_cast<long>(it - pts.begin());
  }

  long lambda_plus(int i, long u) const { return next_forward(i, u) - u; }
  long lambda_minus(int i, long u) const { return u - prev_forward(i, u); }

 private:
  long mod(long u) const {
    const long w = window();
    return ((u % w) + w) % w;
  }

  ExchangeMatrix b0_;
  SlicedSequence slices_;
  Permutation nu_;
  long t_ = 0;
  int g_ = 1;
  std::vector<int> gi_;
  std::vector<ExchangeMatrix> b_at_;
  std::vector<std::vector<int>> mutated_;
  std::vector<std::vector<long>> points_;
  std::vector<bool> in_j_;
  bool regular_ = false;
};

inline SliceSchedule build_schedule(const ExchangeMatrix& b, const SlicedSequence& slices, const Permutation& nu = {}) {
  return SliceSchedule(b, slices, nu);
}

enum class TYKind { Y, T };

/// One relation of the unbalanced Y-system
///   y_i(u) y_i(u+l) = prod (1+y_j(v))^{plus} / prod (1+y_j(v)^{-1})^{minus}
/// or T-system
///   x_i(u) x_i(u+l) = [y/(1+y)] prod x_j(v)^{plus} prod_ext + [1/(1+y)] prod x_j(v)^{minus} prod_ext.
struct TYRelation {
  TYKind kind = TYKind::Y;
  Site site;
  Site partner;
  std::map<Site, long> plus;
  std::map<Site, long> minus;
  /// T only: j outside J(i, nu) mapped to b_ji(u); positive values enter the
  /// first term as x_j^{b}, negative ones the second as x_j^{-b}.
  std::map<int, long> external;
  bool with_coefficients = true;
};

inline TYRelation y_relation(const SliceSchedule& s, int i, long u) {
  if (!s.is_forward(i, u)) throw InvalidArgument("not a forward mutation point");
  TYRelation r;
  r.kind = TYKind::Y;
  r.site = {i, u};
  const long up = s.next_forward(i, u);
  r.partner = {i, up};
  for (long v = u + 1; v < up; ++v)
    for (int j : s.mutated_at(v)) {
      const long bji = s.b(j, i, v);
      if (bji < 0) r.plus[{j, v}] = -bji;
      else if (bji > 0) r.minus[{j, v}] = bji;
    }
  return r;
}

inline TYRelation t_relation(const SliceSchedule& s, int i, long u, bool with_coefficients = true) {
  if (!s.is_forward(i, u)) throw InvalidArgument("not a forward mutation point");
  TYRelation r;
  r.kind = TYKind::T;
  r.with_coefficients = with_coefficients;
  r.site = {i, u};
  r.partner = {i, s.next_forward(i, u)};
  for (std::size_t jj = 0; jj < s.n(); ++jj) {
    const int j = static_cast<int>(jj);
    const long bji = s.b(j, i, u);
    if (bji == 0) continue;
    if (!s.in_j(j)) {
      r.external[j] = bji;
      continue;
    }
    // x_j(u) is the value held since j's previous forward point, i.e. x_j(v)
    // at its next forward point v > u
    const long v = s.next_forward(j, u);
    if (bji > 0) r.plus[{j, v}] = bji;
    else r.minus[{j, v}] = -bji;
  }
  return r;
}

inline std::vector<TYRelation> gen_y_system(const SliceSchedule& s) {
  std::vector<TYRelation> out;
  for (const auto& [i, u] : s.forward_points()) out.push_back(y_relation(s, i, u));
  return out;
}

inline std::vector<TYRelation> gen_t_system(const SliceSchedule& s, bool with_coefficients = true) {
  std::vector<TYRelation> out;
  for (const auto& [i, u] : s.forward_points()) out.push_back(t_relation(s, i, u, with_coefficients));
  return out;
}

namespace ty_detail {

/// Finds the relation whose site is (i, u) modulo the window; returns it with
/// the time shift to apply to its keys.
inline std::pair<const TYRelation*, long> lookup(const SliceSchedule& s, const std::vector<TYRelation>& rels, int i, long u) {
  const long w = s.window();
  const long base = ((u % w) + w) % w;
  for (const auto& r : rels)
    if (r.site.first == i && r.site.second == base) return {&r, u - base};
  return {nullptr, 0};
}

inline long exponent(const std::map<Site, long>& m, int j, long v) {
  auto it = m.find({j, v});
  return it == m.end() ? 0 : it->second;
}

}  // namespace ty_detail

struct DualityReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  /// (j, v, i, u) with d_j G'(j,v;i,u-lambda_-(i,u)) != d_i H'(i,u;j,v)
  std::vector<std::tuple<int, long, int, long>> violations;
};

/// Verifies d_j G'_pm(j,v; i, u - lambda_-(i,u)) = d_i H'_pm(i,u; j,v) over all
/// forward points (i,u) of the window and all forward points (j,v) within one
/// window on either side.
inline DualityReport check_duality(const SliceSchedule& s, const std::vector<TYRelation>& yrels,
                                   const std::vector<TYRelation>& trels) {
  DualityReport rep;
  const auto& d = s.initial().d();
  const long w = s.window();
  for (const auto& [i, u] : s.forward_points()) {
    const long u0 = u - s.lambda_minus(i, u);
    const auto [yr, yshift] = ty_detail::lookup(s, yrels, i, u0);
    if (!yr) throw InvalidArgument("Y-system misses a relation");
    for (long v = u - 2 * w; v <= u + 2 * w; ++v)
      for (int j : s.mutated_at(v)) {
        const auto [tr, tshift] = ty_detail::lookup(s, trels, j, v);
        if (!tr) throw InvalidArgument("T-system misses a relation");
        for (int sign = 0; sign < 2; ++sign) {
          const long gval = ty_detail::exponent(sign == 0 ? yr->plus : yr->minus, j, v - yshift);
          const long hval = ty_detail::exponent(sign == 0 ? tr->plus : tr->minus, i, u - tshift);
          ++rep.pairs_checked;
          if (d[static_cast<std::size_t>(j)] * gval != d[static_cast<std::size_t>(i)] * hval) {
            rep.ok = false;
            rep.violations.emplace_back(j, v, i, u);
          }
        }
      }
  }
  return rep;
}

struct YFromTReport {
  double max_residual = 0.0;
  std::size_t relations_checked = 0;
  std::size_t windows = 0;
};

/// Propagates the coefficient-free T-system from positive initial values
/// x_j (the cluster at time 0), forms Y_i(u) as the ratio of the two terms of
/// each T-relation and checks that these satisfy the Y-system.
inline YFromTReport y_from_t_check(const SliceSchedule& s, const std::vector<TYRelation>& trels,
                                   const std::vector<double>& initial_x, std::size_t windows = 3) {
  const std::size_t n = s.n();
  if (initial_x.size() != n) throw InvalidArgument("need one initial value per index");
  for (double x : initial_x)
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("initial values must be positive reals");
  if (windows < 2) throw InvalidArgument("insufficient window: need at least two windows");
  const long w = s.window();
  const long horizon = static_cast<long>(windows) * w;
  std::map<Site, double> x;
  for (std::size_t j = 0; j < n; ++j)
    if (s.in_j(static_cast<int>(j))) x[{static_cast<int>(j), s.next_forward(static_cast<int>(j), -1)}] = initial_x[j];

  auto value = [&](int j, long v) {
    auto it = x.find({j, v});
    if (it == x.end()) throw InvalidArgument("insufficient window for the T-system at (" + std::to_string(j + 1) + "," + std::to_string(v) + ")");
    return it->second;
  };
  auto term = [&](const TYRelation& r, long shift, bool first) {
    double p = 1.0;
    for (const auto& [site, e] : first ? r.plus : r.minus) p *= std::pow(value(site.first, site.second + shift), static_cast<double>(e));
    for (const auto& [j, e] : r.external)
      if ((e > 0) == first) p *= std::pow(initial_x[static_cast<std::size_t>(j)], static_cast<double>(first ? e : -e));
    return p;
  };

  std::map<Site, double> y;
  for (long u = 0; u < horizon; ++u)
    for (int i : s.mutated_at(u)) {
      const auto [r, shift] = ty_detail::lookup(s, trels, i, u);
      if (!r) throw InvalidArgument("T-system misses a relation");
      const double a = term(*r, shift, true), b = term(*r, shift, false);
      y[{i, u}] = a / b;
      x[{i, r->partner.second + shift}] = (a + b) / value(i, u);
    }

  YFromTReport rep;
  rep.windows = windows;
  const auto yrels = gen_y_system(s);
  for (long u = 0; u < horizon; ++u)
    for (int i : s.mutated_at(u)) {
      const auto [r, shift] = ty_detail::lookup(s, yrels, i, u);
      const long up = r->partner.second + shift;
      if (up >= horizon) continue;
      double rhs = 1.0;
      for (const auto& [site, e] : r->plus) rhs *= std::pow(1.0 + y.at({site.first, site.second + shift}), static_cast<double>(e));
      for (const auto& [site, e] : r->minus)
        rhs /= std::pow(1.0 + 1.0 / y.at({site.first, site.second + shift}), static_cast<double>(e));
      const double lhs = y.at({i, u}) * y.at({i, up});
      rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)));
      ++rep.relations_checked;
    }
  return rep;
}

/// Renders relations as LaTeX. `labels` gives vertex names (default 1..n).
/// Balanced form (regular periods only) writes each left-hand side around its
/// midpoint, y_i(c - h/2) y_i(c + h/2) with h = t g_i, and the T-system in the
/// shifted variables x~_i(w) = x_i(w + t g_i / 2).
inline std::string to_latex(const SliceSchedule& s, const std::vector<TYRelation>& rels,
                            const std::vector<std::string>& labels = {}, bool balanced = false) {
  if (balanced && !s.regular()) throw InvalidArgument("balanced form needs a regular period");
  auto name = [&](int i) {
    if (labels.empty()) return std::to_string(i + 1);
    std::string l = labels.at(static_cast<std::size_t>(i));
    if (l.size() > 2 && l.front() == '(' && l.back() == ')') l = l.substr(1, l.size() - 2);
    return l;
  };
  // a time given in halves
  auto half = [](long twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::string(twice < 0 ? "-" : "") + "\\tfrac{" + std::to_string(std::labs(twice)) + "}{2}";
  };
  auto h = [&](int i) { return s.t() * s.g_i(i); };
  auto yv = [&](int i, long v) { return "y_{" + name(i) + "}(" + std::to_string(v) + ")"; };
  auto xv = [&](int i, long v) {
    if (!balanced) return "x_{" + name(i) + "}(" + std::to_string(v) + ")";
    return "\\tilde{x}_{" + name(i) + "}(" + half(2 * v - h(i)) + ")";
  };
  auto power = [](const std::string& base, long e) { return e == 1 ? base : base + "^{" + std::to_string(e) + "}"; };
  std::ostringstream out;
  out << "\\begin{align*}\n";
  for (const auto& r : rels) {
    const auto [i, u] = r.site;
    const long up = r.partner.second;
    if (r.kind == TYKind::Y) {
      if (balanced) {
        const std::string c = half(2 * u + h(i)), d = half(h(i));
        out << "y_{" << name(i) << "}(" << c << "-" << d << ")\\,y_{" << name(i) << "}(" << c << "+" << d << ")";
      } else {
        out << yv(i, u) << "\\," << yv(i, up);
      }
      std::string num, den;
      for (const auto& [site, e] : r.plus) num += power("(1+" + yv(site.first, site.second) + ")", e);
      for (const auto& [site, e] : r.minus) den += power("(1+" + yv(site.first, site.second) + "^{-1})", e);
      out << " &= \\frac{" << (num.empty() ? "1" : num) << "}{" << (den.empty() ? "1" : den) << "} \\\\\n";
    } else {
      if (balanced) {
        const std::string c = std::to_string(u), d = half(h(i));
        out << "\\tilde{x}_{" << name(i) << "}(" << c << "-" << d << ")\\,\\tilde{x}_{" << name(i) << "}(" << c << "+" << d << ")";
      } else {
        out << xv(i, u) << "\\," << xv(i, up);
      }
      out << " &= ";
      std::string first, second;
      for (const auto& [j, e] : r.external) (e > 0 ? first : second) += power("x_{" + name(j) + "}", e > 0 ? e : -e);
      for (const auto& [site, e] : r.plus) first += power(xv(site.first, site.second), e);
      for (const auto& [site, e] : r.minus) second += power(xv(site.first, site.second), e);
      if (first.empty()) first = "1";
      if (second.empty()) second = "1";
      if (r.with_coefficients) {
        const std::string yy = yv(i, u);
        out << "\\frac{" << yy << "}{1+" << yy << "}" << (first == "1" ? "" : first) << " + \\frac{1}{1+" << yy << "}"
            << (second == "1" ? "" : second);
      } else {
        out << first << " + " << second;
      }
      out << " \\\\\n";
    }
  }
  out << "\\end{align*}\n";
  return out.str();
}

}  // namespace periodica
