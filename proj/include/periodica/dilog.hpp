#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "periodica/error.hpp"
#include "periodica/periodicity.hpp"
#include "periodica/principal_seed.hpp"
#include "periodica/ty_system.hpp"

namespace periodica {

namespace dilog_detail {

inline constexpr double kPi2over6 = std::numbers::pi * std::numbers::pi / 6.0;

// Li2(x) + log(x) log(1-x) / 2 for 0 < x <= 1/2, with y = 1 - x supplied
// separately so callers can keep full precision near 1.
inline double rogers_small(double x, double y) {
  double term = x, sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double t = term / (static_cast<double>(k) * k);
    sum += t;
    if (t < 1e-17 * sum) break;
    term *= x;
  }
  return sum + 0.5 * std::log(x) * std::log(y);
}

inline double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace dilog_detail

/// L(x) given both x and 1 - x. Both must lie in [0,1] and add up to 1.
inline double rogers_L_pair(double x, double one_minus_x) {
  using namespace dilog_detail;
  if (!(x >= 0.0 && x <= 1.0) || !(one_minus_x >= 0.0 && one_minus_x <= 1.0))
    throw InvalidArgument("Rogers dilogarithm needs an argument in [0,1]");
  if (x == 0.0) return 0.0;
  if (one_minus_x == 0.0) return kPi2over6;
  if (x <= 0.5) return rogers_small(x, one_minus_x);
  return kPi2over6 - rogers_small(one_minus_x, x);
}

/// Rogers dilogarithm on [0,1].
inline double rogers_L(double x) { return rogers_L_pair(x, 1.0 - x); }

/// L(Y/(1+Y)) and L(1/(1+Y)) from log Y, without forming 1 - x.
inline std::pair<double, double> rogers_L_of_log(double log_y) {
  // Y/(1+Y) = 1/(1+e^{-l}); 1/(1+Y) = 1/(1+e^{l})
  const double a = std::exp(-dilog_detail::softplus(-log_y));
  const double b = std::exp(-dilog_detail::softplus(log_y));
  return {rogers_L_pair(a, b), rogers_L_pair(b, a)};
}

/// Positive-real y-values at the fundamental region S+ of a seed period.
struct NumericYTrace {
  std::vector<Site> sites;         // S+, in mutation order
  std::vector<double> log_values;  // log Y_i(u) at each site
  std::vector<int> signs;          // tropical sign of y_i(u)
  std::vector<long long> c_sums;   // sum of the c-vector entries
  std::vector<double> initial;
  std::vector<double> final_log;   // log y after the full period
  bool rescaled = false;           // evaluated in log space after overflow

  double value(std::size_t k) const { return std::exp(log_values[k]); }
  /// max |Y_i(Omega) / Y_i(0) - 1|
  double period_residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < initial.size(); ++i) r = std::max(r, std::abs(std::expm1(final_log[i] - std::log(initial[i]))));
    return r;
  }
};

/// Throws unless the schedule is a seed period with nu = id.
inline void require_seed_period(const SliceSchedule& s) {
  const std::size_t n = s.n();
  if (!s.nu().empty() && s.nu() != identity_permutation(n))
    throw InvalidArgument("dilogarithm identities need a seed period with nu = id");
  const auto v = check_seed_period_tropical(s.initial(), NuPeriodSpec{s.slices().flatten(), {}});
  if (!v.seed_periodic.value_or(false)) throw InvalidArgument("sequence is not a seed period");
}

namespace dilog_detail {

struct Tropical {
  std::vector<Site> sites;
  std::vector<int> signs;
  std::vector<long long> c_sums;
};

inline Tropical tropical_sites(const SliceSchedule& s) {
  Tropical out;
  PrincipalSeed seed(s.initial(), FTracking::Off);
  for (long u = 0; u < s.t(); ++u)
    for (int k : s.mutated_at(u)) {
      const auto col = seed.c().column(static_cast<std::size_t>(k));
      int sign = 0;
      long long total = 0;
      for (const auto& c : col) {
        const int sg = sgn(c);
        if (sg != 0 && sign != 0 && sg != sign)
          throw IntegrityError("mixed-sign c-vector at (" + std::to_string(k + 1) + "," + std::to_string(u) + ")");
        if (sg != 0) sign = sg;
        total += to_ll(c);
      }
      if (sign == 0) throw IntegrityError("zero c-vector");
      out.sites.emplace_back(k, u);
      out.signs.push_back(sign);
      out.c_sums.push_back(total);
      seed.mutate_in_place(static_cast<std::size_t>(k));
    }
  return out;
}

// One pass of the y-mutation along the period; returns false on overflow.
inline bool run_pass(const SliceSchedule& s, const std::vector<double>& y0, bool log_space, NumericYTrace& tr) {
  const std::size_t n = s.n();
  std::vector<double> ly(n), y(y0);
  for (std::size_t i = 0; i < n; ++i) ly[i] = std::log(y0[i]);
  ExchangeMatrix b = s.initial();
  tr.log_values.clear();
  for (long u = 0; u < s.t(); ++u)
    for (int kk : s.mutated_at(u)) {
      const auto k = static_cast<std::size_t>(kk);
      if (log_space) {
        tr.log_values.push_back(ly[k]);
        const double lk = ly[k], sp_pos = softplus(lk), sp_neg = softplus(-lk);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == k) continue;
          const double bki = b(k, i).get_d();
          // y_i (1+y_k^{-1})^{-b_ki} when b_ki > 0, y_i (1+y_k)^{-b_ki} when b_ki < 0
          if (bki > 0) ly[i] -= bki * sp_neg;
          if (bki < 0) ly[i] -= bki * sp_pos;
        }
        ly[k] = -lk;
        for (double v : ly)
          if (!std::isfinite(v)) return false;
      } else {
        const double yk = y[k];
        if (!(yk > 0.0) || !std::isfinite(yk)) return false;
        tr.log_values.push_back(std::log(yk));
        for (std::size_t i = 0; i < n; ++i) {
          if (i == k) continue;
          const double bki = b(k, i).get_d();
          if (bki > 0) y[i] *= std::pow(1.0 + 1.0 / yk, -bki);
          if (bki < 0) y[i] *= std::pow(1.0 + yk, -bki);
        }
        y[k] = 1.0 / yk;
        for (double v : y)
          if (!(v > 0.0) || !std::isfinite(v)) return false;
      }
      b = b.mutate(k);
    }
  tr.final_log.resize(n);
  for (std::size_t i = 0; i < n; ++i) tr.final_log[i] = log_space ? ly[i] : std::log(y[i]);
  return true;
}

}  // namespace dilog_detail

/// Runs the y-mutation over the positive reals along one period and
/// records Y at every site of S+, with tropical signs from a parallel
/// c-vector run. The schedule must be a seed period.
inline NumericYTrace propagate_numeric(const SliceSchedule& s, const std::vector<double>& initial_y) {
  if (initial_y.size() != s.n()) throw InvalidArgument("initial values must have one entry per vertex");
  for (double v : initial_y)
    if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("initial values must be positive and finite");
  const auto trop = dilog_detail::tropical_sites(s);
  NumericYTrace tr;
  tr.sites = trop.sites;
  tr.signs = trop.signs;
  tr.c_sums = trop.c_sums;
  tr.initial = initial_y;
  if (!dilog_detail::run_pass(s, initial_y, false, tr)) {
    tr.rescaled = true;
    if (!dilog_detail::run_pass(s, initial_y, true, tr)) throw NumericalError("y-values overflow even in log space");
  }
  return tr;
}

/// Largest relative residual of the generated Y-system on a trace.
inline double y_system_residual(const SliceSchedule& s, const NumericYTrace& tr) {
  using dilog_detail::softplus;
  const long omega = s.t();
  auto wrap = [&](long u) { return ((u % omega) + omega) % omega; };
  std::map<Site, double> ly;
  for (std::size_t k = 0; k < tr.sites.size(); ++k) ly[tr.sites[k]] = tr.log_values[k];
  auto at = [&](int i, long u) {
    const auto it = ly.find({i, wrap(u)});
    if (it == ly.end()) throw IntegrityError("Y-relation refers to a point outside S+");
    return it->second;
  };
  double worst = 0.0;
  for (const auto& r : gen_y_system(s)) {
    const double lhs = at(r.site.first, r.site.second) + at(r.partner.first, r.partner.second);
    double rhs = 0.0;
    for (const auto& [site, e] : r.plus) rhs += static_cast<double>(e) * softplus(at(site.first, site.second));
    for (const auto& [site, e] : r.minus) rhs -= static_cast<double>(e) * softplus(-at(site.first, site.second));
    worst = std::max(worst, std::abs(std::expm1(lhs - rhs)));
  }
  return worst;
}

struct SignCounts {
  long n_plus = 0, n_minus = 0;          // unweighted
  long w_plus = 0, w_minus = 0;          // with multiplicity d~_i
  long sites = 0, weighted_sites = 0;
};

/// Counts positive and negative tropical y-values over S+.
inline SignCounts count_tropical_signs(const SliceSchedule& s) {
  require_seed_period(s);
  const auto trop = dilog_detail::tropical_sites(s);
  const auto dt = s.initial().d_tilde();
  SignCounts out;
  for (std::size_t k = 0; k < trop.sites.size(); ++k) {
    const long w = dt[static_cast<std::size_t>(trop.sites[k].first)];
    (trop.signs[k] > 0 ? out.n_plus : out.n_minus) += 1;
    (trop.signs[k] > 0 ? out.w_plus : out.w_minus) += w;
    out.sites += 1;
    out.weighted_sites += w;
  }
  return out;
}

/// (6/pi^2) sum L(Y/(1+Y)) and (6/pi^2) sum L(1/(1+Y)) over S+.
inline std::pair<double, double> dilog_sums(const SliceSchedule& s, const NumericYTrace& tr, bool weighted) {
  const auto dt = s.initial().d_tilde();
  dilog_detail::Kahan minus, plus;
  for (std::size_t k = 0; k < tr.sites.size(); ++k) {
    const double w = weighted ? static_cast<double>(dt[static_cast<std::size_t>(tr.sites[k].first)]) : 1.0;
    const auto [lm, lp] = rogers_L_of_log(tr.log_values[k]);
    minus.add(w * lm);
    plus.add(w * lp);
  }
  const double scale = 1.0 / dilog_detail::kPi2over6;
  return {minus.sum * scale, plus.sum * scale};
}

struct DilogOptions {
  int trials = 5;
  std::uint64_t seed = 20110501;
  double tolerance = 1e-9;
  bool weighted = false;
  double low = 0.1, high = 10.0;  // log-uniform draw range
};

inline std::vector<double> log_uniform_draw(std::mt19937_64& rng, std::size_t n, double low, double high) {
  std::uniform_real_distribution<double> dist(std::log(low), std::log(high));
  std::vector<double> v(n);
  for (auto& x : v) x = std::exp(dist(rng));
  return v;
}

struct DilogTrial {
  std::vector<double> initial;
  double sum_minus = 0, sum_plus = 0;
  double residual_minus = 0, residual_plus = 0;
  double euler_residual = 0;     // |sum_minus + sum_plus - |S+||
  double period_residual = 0;    // Y(Omega) vs Y(0)
  double relation_residual = 0;  // generated Y-system on the trace
  bool rescaled = false;
};

struct DilogReport {
  long n_plus = 0, n_minus = 0;  // weighted when `weighted`
  long sites = 0;                // |S+|, weighted when `weighted`
  bool weighted = false;
  bool conditional = false;  // skew-symmetrizable: relies on sign coherence
  double tolerance = 0;
  std::vector<DilogTrial> trials;
  double max_residual = 0;
  double spread = 0;  // largest cross-trial difference of sum_minus
  bool ok = false;
};

/// Verifies both dilogarithm identities on random positive initial values.
inline DilogReport verify_identity(const SliceSchedule& s, const DilogOptions& opt = {}) {
  if (opt.trials < 1) throw InvalidArgument("at least one trial is needed");
  const auto counts = count_tropical_signs(s);
  DilogReport rep;
  rep.weighted = opt.weighted;
  rep.conditional = !s.initial().is_skew_symmetric();
  rep.tolerance = opt.tolerance;
  rep.n_plus = opt.weighted ? counts.w_plus : counts.n_plus;
  rep.n_minus = opt.weighted ? counts.w_minus : counts.n_minus;
  rep.sites = opt.weighted ? counts.weighted_sites : counts.sites;
  std::mt19937_64 rng(opt.seed);
  double lo = 0, hi = 0;
  for (int k = 0; k < opt.trials; ++k) {
    DilogTrial t;
    t.initial = log_uniform_draw(rng, s.n(), opt.low, opt.high);
    const auto tr = propagate_numeric(s, t.initial);
    std::tie(t.sum_minus, t.sum_plus) = dilog_sums(s, tr, opt.weighted);
    t.residual_minus = std::abs(t.sum_minus - static_cast<double>(rep.n_minus));
    t.residual_plus = std::abs(t.sum_plus - static_cast<double>(rep.n_plus));
    t.euler_residual = std::abs(t.sum_minus + t.sum_plus - static_cast<double>(rep.sites));
    t.period_residual = tr.period_residual();
    t.relation_residual = y_system_residual(s, tr);
    t.rescaled = tr.rescaled;
    rep.max_residual = std::max({rep.max_residual, t.residual_minus, t.residual_plus, t.euler_residual});
    lo = k == 0 ? t.sum_minus : std::min(lo, t.sum_minus);
    hi = k == 0 ? t.sum_minus : std::max(hi, t.sum_minus);
    rep.trials.push_back(std::move(t));
  }
  rep.spread = hi - lo;
  rep.ok = rep.max_residual < opt.tolerance && rep.spread < opt.tolerance;
  for (const auto& t : rep.trials) rep.ok = rep.ok && t.period_residual < opt.tolerance;
  return rep;
}

struct ConstancyReport {
  std::vector<double> values;  // sum_minus at each draw
  double spread = 0;
  std::vector<double> gradient;
  double max_gradient = 0;
  bool ok = false;
};

/// Numeric surrogate of the constancy condition: the dilogarithm sum must
/// not move across random draws and must have a vanishing gradient.
inline ConstancyReport constancy_probe(const SliceSchedule& s, const std::vector<double>& base_point, double epsilon = 1e-5,
                                       int draws = 10, std::uint64_t seed = 7, bool weighted = false) {
  require_seed_period(s);
  if (base_point.size() != s.n()) throw InvalidArgument("base point must have one entry per vertex");
  for (double v : base_point)
    if (!(v > epsilon)) throw InvalidArgument("base point must exceed the step in every coordinate");
  auto sum_at = [&](const std::vector<double>& y) { return dilog_sums(s, propagate_numeric(s, y), weighted).first; };
  ConstancyReport rep;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < draws; ++k) rep.values.push_back(sum_at(log_uniform_draw(rng, s.n(), 0.1, 10.0)));
  const auto [mn, mx] = std::minmax_element(rep.values.begin(), rep.values.end());
  rep.spread = rep.values.empty() ? 0.0 : *mx - *mn;
  for (std::size_t j = 0; j < s.n(); ++j) {
    auto up = base_point, down = base_point;
    up[j] += epsilon;
    down[j] -= epsilon;
    const double g = (sum_at(up) - sum_at(down)) / (2 * epsilon);
    rep.gradient.push_back(g);
    rep.max_gradient = std::max(rep.max_gradient, std::abs(g));
  }
  rep.ok = rep.spread < 1e-9 && rep.max_gradient < 1e-6;
  return rep;
}

struct LimitReport {
  double scale = 0;
  double max_deviation = 0;  // max |log Y / log scale - sum(c)|
  bool signs_match = false;  // log Y / log scale has the tropical sign everywhere
};

/// With every initial Y equal to a small scale the trace is dominated by
/// the tropical monomial: log Y_i(u) / log(scale) tends to the c-vector sum.
inline LimitReport limit_check(const SliceSchedule& s, double scale) {
  if (!(scale > 0.0 && scale < 1.0)) throw InvalidArgument("limit scale must lie in (0,1)");
  const auto tr = propagate_numeric(s, std::vector<double>(s.n(), scale));
  LimitReport rep;
  rep.scale = scale;
  rep.signs_match = true;
  const double ls = std::log(scale);
  for (std::size_t k = 0; k < tr.sites.size(); ++k) {
    const double ratio = tr.log_values[k] / ls;
    rep.max_deviation = std::max(rep.max_deviation, std::abs(ratio - static_cast<double>(tr.c_sums[k])));
    if ((ratio > 0 ? 1 : -1) != tr.signs[k]) rep.signs_match = false;
  }
  return rep;
}

}  // namespace periodica
