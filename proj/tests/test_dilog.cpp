#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "periodica/catalog.hpp"
#include "periodica/dilog.hpp"

using namespace periodica;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

// tanh-sinh quadrature of -1/2 (log(1-t)/t + log(t)/(1-t)) over [0,x]
double rogers_quadrature(double x) {
  auto f = [](double t, double one_minus_t) { return -0.5 * (std::log1p(-t) / t + std::log(t) / one_minus_t); };
  const double h = 1.0 / 64;
  double sum = 0.0;
  for (int k = -400; k <= 400; ++k) {
    const double s = k * h;
    const double arg = std::numbers::pi / 2 * std::sinh(s);
    const double w = std::numbers::pi / 2 * std::cosh(s) / (std::cosh(arg) * std::cosh(arg));
    // node in (0,x): t = x (1 + tanh(arg)) / 2, with both distances to the ends kept exact
    const double e = std::exp(-2 * std::abs(arg));
    const double small = e / (1 + e);  // (1 - tanh|arg|) / 2
    const double t = arg >= 0 ? x * (1 - small) : x * small;
    if (t <= 0 || t >= 1) continue;
    const double one_minus_t = 1 - t;
    sum += w * f(t, one_minus_t);
  }
  return sum * h * x / 2;
}

// independent c-matrix run: counts signs of c-columns before each mutation
std::pair<long, long> brute_force_signs(const ExchangeMatrix& b0, const std::vector<int>& seq) {
  const std::size_t n = b0.n();
  std::vector<std::vector<long long>> b(n, std::vector<long long>(n)), c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    c[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) b[i][j] = b0(i, j).get_si();
  }
  long plus = 0, minus = 0;
  for (int kk : seq) {
    const auto k = static_cast<std::size_t>(kk);
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += c[i][k];
    (s > 0 ? plus : minus) += 1;
    // extended matrix [B; C] mutated as a whole
    std::vector<std::vector<long long>> ext(2 * n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i) ext[i] = b[i], ext[n + i] = c[i];
    auto out = ext;
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == k || j == k) {
          out[i][j] = -ext[i][j];
        } else {
          const long long a = ext[i][k], d = ext[k][j];
          out[i][j] = ext[i][j] + (std::abs(a) * d + a * std::abs(d)) / 2;
        }
      }
    for (std::size_t i = 0; i < n; ++i) b[i] = out[i], c[i] = out[n + i];
  }
  return {plus, minus};
}

SliceSchedule seed_schedule(const CatalogEntry& e) {
  return SliceSchedule(e.b, e.parse(e.period), e.permutation(e.period_permutation));
}

}  // namespace

TEST_CASE("P12: Rogers dilogarithm") {
  CHECK(rogers_L(0.0) == 0.0);
  CHECK(rogers_L(1.0) == kPi2 / 6);
  CHECK(std::abs(rogers_L(0.5) - kPi2 / 12) < 1e-15);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const double x = u(rng);
    worst = std::max(worst, std::abs(rogers_L(x) + rogers_L(1 - x) - kPi2 / 6));
  }
  CHECK(worst < 1e-12);
  for (double x : {1e-12, 1e-6, 0.01, 0.2, 0.37, 0.5, 0.63, 0.9, 0.999, 1 - 1e-9}) {
    INFO(x);
    CHECK(std::abs(rogers_L(x) - rogers_quadrature(x)) < 1e-12);
  }
  CHECK_THROWS_AS(rogers_L(-0.1), InvalidArgument);
  CHECK_THROWS_AS(rogers_L(1.5), InvalidArgument);
  CHECK_THROWS_AS(rogers_L(std::nan("")), InvalidArgument);
}

TEST_CASE("numeric propagation") {
  // isolated vertex
  const SliceSchedule a1(ExchangeMatrix::from_rows({{0}}), parse_sequence("(1)|(1)"));
  const auto t1 = propagate_numeric(a1, {3.0});
  REQUIRE(t1.sites.size() == 2);
  CHECK(t1.value(0) == Catch::Approx(3.0));
  CHECK(t1.value(1) == Catch::Approx(1.0 / 3));
  CHECK(t1.signs == std::vector<int>{1, -1});

  const auto& a2 = get_entry("A2");
  const auto s = seed_schedule(a2);
  const auto tr = propagate_numeric(s, {1.0, 1.0});
  CHECK(tr.sites.size() == 10);
  CHECK(y_system_residual(s, tr) < 1e-9);
  CHECK(tr.period_residual() < 1e-9);
  CHECK_FALSE(tr.rescaled);
  // first-visit sites carry the identity c-vector
  CHECK(tr.signs[0] == 1);
  CHECK(tr.signs[1] == 1);
  // the pentagon at (1,1): y1 = 1, y2 = 1/2 after the first step
  CHECK(tr.value(0) == Catch::Approx(1.0));
  CHECK(tr.value(1) == Catch::Approx(0.5));

  CHECK_THROWS_AS(propagate_numeric(s, {1.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(propagate_numeric(s, {1.0, -2.0}), InvalidArgument);
  CHECK_THROWS_AS(propagate_numeric(s, {1.0}), InvalidArgument);
}

TEST_CASE("overflow falls back to log space") {
  const auto s = seed_schedule(get_entry("A2"));
  const auto tr = propagate_numeric(s, {1e300, 1e-300});
  CHECK(tr.rescaled);
  CHECK(tr.period_residual() < 1e-9);
  const auto [m, p] = dilog_sums(s, tr, false);
  CHECK(std::abs(m - 4) < 1e-9);
  CHECK(std::abs(p - 6) < 1e-9);
}

TEST_CASE("tropical sign counts") {
  // frozen from the first run, cross-checked by the independent c-matrix run
  const std::map<std::string, std::pair<long, long>> fixtures = {
      {"A2", {6, 4}},           {"A3", {12, 6}},          {"A4", {20, 8}},
      {"A4-level4", {48, 60}}, {"B4-level4", {152, 200}}, {"sine-Gordon", {468, 156}},
  };
  for (const auto& e : catalog()) {
    if (!e.seed_period) continue;
    INFO(e.name);
    const auto s = seed_schedule(e);
    const auto c = count_tropical_signs(s);
    REQUIRE(fixtures.count(e.name) == 1);
    CHECK(std::pair{c.n_plus, c.n_minus} == fixtures.at(e.name));
    CHECK(std::pair{c.n_plus, c.n_minus} == brute_force_signs(e.b, e.parse(e.period).flatten()));
    CHECK(c.n_plus + c.n_minus == static_cast<long>(s.slices().flatten().size()));
    CHECK(c.w_plus == c.n_plus);
  }
  CHECK(fixtures.size() == 6);
  // only seed periods qualify
  const auto& a3 = get_entry("A3");
  CHECK_THROWS_AS(count_tropical_signs(SliceSchedule(a3.b, a3.parse("i^5"))), InvalidArgument);
  const auto& a2 = get_entry("A2");
  CHECK_THROWS_AS(count_tropical_signs(SliceSchedule(a2.b, a2.parse("i+"), a2.permutation("nu"))), InvalidArgument);
}

TEST_CASE("P6: dilogarithm identities on catalog seed periods") {
  for (const auto& e : catalog()) {
    if (!e.seed_period) continue;
    INFO(e.name);
    const auto s = seed_schedule(e);
    const auto r = verify_identity(s, DilogOptions{.trials = 5});
    CHECK(r.ok);
    CHECK(r.trials.size() == 5);
    CHECK(r.max_residual < 1e-9);
    CHECK(r.spread < 1e-9);
    CHECK(r.n_plus + r.n_minus == r.sites);
    CHECK_FALSE(r.conditional);
    for (const auto& t : r.trials) {
      CHECK(t.euler_residual < 1e-9);
      CHECK(t.period_residual < 1e-9);
      CHECK(t.relation_residual < 1e-9);
      for (double y : t.initial) CHECK((y >= 0.1 && y <= 10.0));
    }
  }
}

TEST_CASE("weighted identities for skew-symmetrizable periods") {
  const SliceSchedule b2(ExchangeMatrix::from_rows({{0, 1}, {-2, 0}}), parse_sequence("((1)|(2))^3"));
  DilogOptions w;
  w.weighted = true;
  const auto r = verify_identity(b2, w);
  CHECK(r.conditional);
  CHECK(r.ok);
  CHECK(r.n_plus + r.n_minus == r.sites);
  CHECK(r.sites == 9);
  CHECK(std::pair{r.n_plus, r.n_minus} == std::pair{6L, 3L});
  // without multiplicities the sum moves with the initial values
  const auto u = verify_identity(b2);
  CHECK_FALSE(u.ok);
  CHECK(u.spread > 1e-3);

  const SliceSchedule g2(ExchangeMatrix::from_rows({{0, 1}, {-3, 0}}), parse_sequence("((1)|(2))^4"));
  const auto rg = verify_identity(g2, w);
  CHECK(rg.ok);
  CHECK(std::pair{rg.n_plus, rg.n_minus} == std::pair{12L, 4L});
}

TEST_CASE("constancy probe") {
  const auto s = seed_schedule(get_entry("A2"));
  const auto r = constancy_probe(s, {1.0, 1.0}, 1e-5);
  CHECK(r.values.size() >= 10);
  CHECK(r.spread < 1e-9);
  CHECK(r.max_gradient < 1e-6);
  CHECK(r.ok);
  for (const char* name : {"A3", "A4", "A4-level4"}) {
    const auto& e = get_entry(name);
    INFO(name);
    CHECK(constancy_probe(seed_schedule(e), std::vector<double>(e.n(), 2.0)).ok);
  }
  // a single mutation of A1 is not a seed period
  const SliceSchedule a1(ExchangeMatrix::from_rows({{0}}), parse_sequence("(1)"));
  CHECK_THROWS_AS(constancy_probe(a1, {1.0}), InvalidArgument);
}

TEST_CASE("0/infinity limit follows the tropical signs") {
  for (const auto& e : catalog()) {
    if (!e.seed_period) continue;
    INFO(e.name);
    const auto s = seed_schedule(e);
    const auto coarse = limit_check(s, 1e-3);
    const auto fine = limit_check(s, 1e-6);
    CHECK(coarse.signs_match);
    CHECK(fine.signs_match);
    CHECK(fine.max_deviation < coarse.max_deviation);
    CHECK(fine.max_deviation < 1e-5);
  }
  CHECK_THROWS_AS(limit_check(seed_schedule(get_entry("A2")), 2.0), InvalidArgument);
}
