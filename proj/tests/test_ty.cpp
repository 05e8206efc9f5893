#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "periodica/catalog.hpp"
#include "periodica/ty_system.hpp"

using namespace periodica;

namespace {

ExchangeMatrix a2() { return ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}); }
ExchangeMatrix a3() { return ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}); }

SliceSchedule catalog_schedule(const std::string& name) {
  const auto& e = get_entry(name);
  return SliceSchedule(e.b, e.parse(e.ty_slice), e.permutation(e.ty_permutation));
}

std::vector<double> random_positive(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> logu(std::log(0.1), std::log(10.0));
  std::vector<double> v(n);
  for (auto& x : v) x = std::exp(logu(rng));
  return v;
}

// relation content keyed by slice-independent occurrence numbers
using Canon = std::tuple<int, long, long, std::map<std::pair<int, long>, long>, std::map<std::pair<int, long>, long>>;
std::set<Canon> canonical(const SliceSchedule& s, const std::vector<TYRelation>& rels) {
  std::set<Canon> out;
  for (const auto& r : rels) {
    std::map<std::pair<int, long>, long> p, m;
    for (const auto& [site, e] : r.plus) p[{site.first, s.occurrence(site.first, site.second)}] = e;
    for (const auto& [site, e] : r.minus) m[{site.first, s.occurrence(site.first, site.second)}] = e;
    out.emplace(r.site.first, s.occurrence(r.site.first, r.site.second),
                s.occurrence(r.partner.first, r.partner.second), p, m);
  }
  return out;
}

}  // namespace

TEST_CASE("A2 schedule") {
  const SliceSchedule s(a2(), parse_sequence("(1)|(2)"));
  CHECK(s.t() == 2);
  CHECK(s.window() == 2);
  CHECK(s.forward_points() == std::vector<Site>{{0, 0}, {1, 1}});
  for (const auto& [i, u] : s.forward_points()) {
    CHECK(s.lambda_plus(i, u) == 2);
    CHECK(s.lambda_minus(i, u) == 2);
  }
  CHECK(s.regular());
  CHECK(s.is_forward(0, -2));
  CHECK(s.is_forward(1, 7));
  CHECK_FALSE(s.is_forward(1, 6));
}

TEST_CASE("schedule validation") {
  // the slice condition fails when adjacent vertices share a slice
  CHECK_THROWS_AS(SliceSchedule(a2(), parse_sequence("(1,2)|(1)")), InvalidArgument);
  try {
    SliceSchedule(a3(), parse_sequence("(1,2)|(3)"));
    FAIL("expected a slice violation");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("stage 0") != std::string::npos);
  }
  // not a period of B
  CHECK_THROWS_AS(SliceSchedule(a3(), parse_sequence("(1)|(2)")), InvalidArgument);
  // the maximal-length slice of every catalog period validates
  for (const auto& e : catalog()) {
    INFO(e.name);
    const auto flat = e.parse(e.ty_slice).flatten();
    CHECK_NOTHROW(SliceSchedule(e.b, SlicedSequence::singletons(flat), e.permutation(e.ty_permutation)));
  }
}

TEST_CASE("schedule invariants on catalog slices") {
  for (const auto& e : catalog()) {
    INFO(e.name);
    const auto s = catalog_schedule(e.name);
    CHECK(s.regular());
    const long w = s.window();
    for (const auto& [i, u] : s.forward_points()) {
      const long lp = s.lambda_plus(i, u), lm = s.lambda_minus(i, u);
      CHECK(lp > 0);
      CHECK(lp <= w);
      CHECK(s.lambda_plus(i, u - lm) == lm);
      CHECK(s.lambda_plus(i, u + w) == lp);
      // regular periods have common difference t g_i
      CHECK(lp == s.t() * s.g_i(i));
    }
  }
  CHECK(catalog_schedule("tamely-laced-level4").window() == 10);
  CHECK(catalog_schedule("sine-Gordon").window() == 12);
  CHECK(catalog_schedule("delPezzo3").window() == 6);
  CHECK(catalog_schedule("B4-level4").window() == 4);
}

TEST_CASE("irregular schedules from found periods") {
  for (const auto& f : find_period(a3(), 12, 6, 1)) {
    const SliceSchedule s(a3(), SlicedSequence::singletons(f.seq), f.nu);
    for (const auto& [i, u] : s.forward_points()) {
      const long lm = s.lambda_minus(i, u);
      CHECK(s.lambda_plus(i, u - lm) == lm);
      CHECK(s.lambda_plus(i, u) < s.window() + 1);
    }
    const auto y = gen_y_system(s);
    const auto t = gen_t_system(s);
    CHECK(check_duality(s, y, t).ok);
    std::mt19937_64 rng(f.seq.size());
    CHECK(y_from_t_check(s, gen_t_system(s, false), random_positive(rng, 3)).max_residual < 1e-9);
  }
}

TEST_CASE("(A4,4) forward points: i+j+u even") {
  const auto& e = get_entry("A4-level4");
  const auto s = catalog_schedule("A4-level4");
  CHECK(s.t() == 1);
  CHECK(s.g() == 2);
  for (long u = -3; u < 5; ++u)
    for (std::size_t v = 0; v < e.n(); ++v) {
      const int i = e.labels[v][1] - '0', j = e.labels[v][3] - '0';
      CHECK(s.is_forward(static_cast<int>(v), u) == ((i + j + u) % 2 == 0));
    }
}

TEST_CASE("A2 Y- and T-relations") {
  const SliceSchedule s(a2(), parse_sequence("(1)|(2)"));
  const auto y = gen_y_system(s);
  REQUIRE(y.size() == 2);
  // b21(1) = +1 after mu_1, so the factor sits in the denominator
  CHECK(y[0].site == Site{0, 0});
  CHECK(y[0].partner == Site{0, 2});
  CHECK(y[0].plus.empty());
  CHECK(y[0].minus == std::map<Site, long>{{{1, 1}, 1}});
  const auto t = gen_t_system(s);
  CHECK(t[0].plus.empty());
  CHECK(t[0].minus == std::map<Site, long>{{{1, 1}, 1}});
  CHECK(t[0].external.empty());
  // isolated vertex: empty products
  const SliceSchedule a1(ExchangeMatrix::from_rows({{0}}), parse_sequence("(1)"));
  const auto r = gen_y_system(a1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].plus.empty());
  CHECK(r[0].minus.empty());
  CHECK(r[0].partner == Site{0, 1});
}

TEST_CASE("(A4,4) relations match the octahedron form") {
  const auto& e = get_entry("A4-level4");
  const auto s = catalog_schedule("A4-level4");
  auto at = [&](int i, int j) { return e.index_of("(" + std::to_string(i) + "," + std::to_string(j) + ")"); };
  const auto ys = gen_y_system(s);
  const auto ts = gen_t_system(s, false);
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const auto [v, u] = ys[k].site;
    const int i = e.labels[static_cast<std::size_t>(v)][1] - '0', j = e.labels[static_cast<std::size_t>(v)][3] - '0';
    std::map<Site, long> horiz, vert;
    for (int di : {-1, 1})
      if (i + di >= 1 && i + di <= 4) horiz[{at(i + di, j), u + 1}] = 1;
    for (int dj : {-1, 1})
      if (j + dj >= 1 && j + dj <= 3) vert[{at(i, j + dj), u + 1}] = 1;
    INFO(e.labels[static_cast<std::size_t>(v)] << " at " << u);
    CHECK(ys[k].partner.second == u + 2);
    CHECK(ys[k].plus == horiz);
    CHECK(ys[k].minus == vert);
    CHECK(ts[k].plus == horiz);
    CHECK(ts[k].minus == vert);
  }
}

TEST_CASE("(B4,4) black column relations") {
  const auto& e = get_entry("B4-level4");
  const auto s = catalog_schedule("B4-level4");
  CHECK(s.t() == 2);
  auto at = [&](int i, int j) { return e.index_of("(" + std::to_string(i) + "," + std::to_string(j) + ")"); };
  // P+ : ib+ and iw+ at u = 0 mod 4, ib- at 1 and 3, ib+ and iw- at 2
  const auto bp = e.sequences.at("ib+").flatten(), bm = e.sequences.at("ib-").flatten();
  const auto wp = e.sequences.at("iw+").flatten(), wm = e.sequences.at("iw-").flatten();
  auto expect = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };
  CHECK(s.mutated_at(0) == expect(bp, wp));
  CHECK(s.mutated_at(1) == expect(bm, {}));
  CHECK(s.mutated_at(2) == expect(bp, wm));
  CHECK(s.mutated_at(3) == expect(bm, {}));
  // y_{4,2j+1}(u-1) y_{4,2j+1}(u+1) = 1 / ((1+y_{4,2j}^{-1})(1+y_{4,2j+2}^{-1}))
  for (const auto& r : gen_y_system(s)) {
    const auto& l = e.labels[static_cast<std::size_t>(r.site.first)];
    const auto [col, row] = std::pair{l[1] - '0', l[3] - '0'};
    if (col != 4 || row % 2 == 0) continue;
    INFO(l << " at " << r.site.second);
    CHECK(r.partner.second == r.site.second + 2);
    CHECK(r.plus.empty());
    std::map<Site, long> expected;
    for (int d : {-1, 1})
      if (row + d >= 1 && row + d <= 7) expected[{at(4, row + d), r.site.second + 1}] = 1;
    CHECK(r.minus == expected);
  }
}

TEST_CASE("P9: duality on A2, A3, (A4,4)") {
  for (const char* name : {"A2", "A3", "A4-level4"}) {
    INFO(name);
    const auto s = catalog_schedule(name);
    const auto rep = check_duality(s, gen_y_system(s), gen_t_system(s));
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
    CHECK(rep.pairs_checked > 0);
  }
  for (const auto& e : catalog()) {
    INFO(e.name);
    const auto s = catalog_schedule(e.name);
    CHECK(check_duality(s, gen_y_system(s), gen_t_system(s)).ok);
  }
  // zero matrix
  const SliceSchedule z(ExchangeMatrix::from_rows({{0, 0}, {0, 0}}), parse_sequence("(1,2)"));
  CHECK(check_duality(z, gen_y_system(z), gen_t_system(z)).ok);
}

TEST_CASE("duality is weighted by the symmetrizer") {
  const auto b2 = ExchangeMatrix::from_rows({{0, 1}, {-2, 0}});
  const SliceSchedule s(b2, parse_sequence("(1)|(2)"));
  const auto y = gen_y_system(s), t = gen_t_system(s);
  CHECK(check_duality(s, y, t).ok);
  // the unweighted identity fails: G' and H' differ by the ratio d_i / d_j
  bool unweighted_equal = true;
  for (const auto& yr : y)
    for (const auto& tr : t) {
      for (const auto& [site, e] : yr.minus) {
        const long u = yr.partner.second;
        const auto it = tr.minus.find({yr.site.first, u - (tr.site.second - site.second)});
        if (tr.site.first == site.first && it != tr.minus.end() && it->second != e) unweighted_equal = false;
      }
    }
  CHECK_FALSE(unweighted_equal);
}

TEST_CASE("corrupted relations are reported") {
  const auto s = catalog_schedule("A3");
  auto y = gen_y_system(s);
  const auto t = gen_t_system(s);
  y[0].minus.begin()->second += 1;
  const auto rep = check_duality(s, y, t);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("P10: Y from T") {
  std::mt19937_64 rng(2010);
  for (const char* name : {"A2", "A4-level4"}) {
    const auto s = catalog_schedule(name);
    const auto t = gen_t_system(s, false);
    for (int trial = 0; trial < 3; ++trial) {
      INFO(name << " trial " << trial);
      const auto rep = y_from_t_check(s, t, random_positive(rng, s.n()), 4);
      CHECK(rep.max_residual < 1e-9);
      CHECK(rep.relations_checked > 0);
    }
  }
  for (const auto& e : catalog()) {
    INFO(e.name);
    const auto s = catalog_schedule(e.name);
    CHECK(y_from_t_check(s, gen_t_system(s, false), random_positive(rng, s.n()), 3).max_residual < 1e-9);
  }
  // A1 with constant 1: Y is identically 1
  const SliceSchedule a1(ExchangeMatrix::from_rows({{0}}), parse_sequence("(1)"));
  CHECK(y_from_t_check(a1, gen_t_system(a1, false), {1.0}).max_residual == 0.0);
  CHECK_THROWS_AS(y_from_t_check(a1, gen_t_system(a1, false), {-1.0}), InvalidArgument);
  CHECK_THROWS_AS(y_from_t_check(a1, gen_t_system(a1, false), {1.0}, 1), InvalidArgument);
}

TEST_CASE("external factors outside J") {
  // A2 sits inside A3; vertex 3 is never mutated
  const SliceSchedule s(a3(), parse_sequence("((1)|(2))^5"));
  CHECK_FALSE(s.in_j(2));
  CHECK_FALSE(s.regular());
  const auto t = gen_t_system(s, false);
  bool seen = false;
  for (const auto& r : t) {
    const long b3i = s.b(2, r.site.first, r.site.second);
    if (b3i == 0) {
      CHECK(r.external.empty());
      continue;
    }
    REQUIRE(r.external.count(2) == 1);
    CHECK(r.external.at(2) == b3i);
    seen = true;
  }
  CHECK(seen);
  std::mt19937_64 rng(3);
  CHECK(y_from_t_check(s, t, random_positive(rng, 3), 3).max_residual < 1e-9);
}

TEST_CASE("slice choice does not change the relations") {
  const auto i = parse_sequence("(1,3)|(2)");
  const SliceSchedule coarse(a3(), i);
  const SliceSchedule fine(a3(), parse_sequence("(1)|(3)|(2)"));
  const SliceSchedule fine2(a3(), parse_sequence("(3)|(1)|(2)"));
  CHECK(canonical(coarse, gen_y_system(coarse)) == canonical(fine, gen_y_system(fine)));
  CHECK(canonical(coarse, gen_t_system(coarse)) == canonical(fine2, gen_t_system(fine2)));
  const auto& b4 = get_entry("B4-level4");
  const SliceSchedule b4a(b4.b, b4.parse("(ib+,iw+)|ib-"), b4.permutation("nu"));
  const SliceSchedule b4b(b4.b, b4.parse("ib+|iw+|ib-"), b4.permutation("nu"));
  CHECK(canonical(b4a, gen_y_system(b4a)) == canonical(b4b, gen_y_system(b4b)));
}

TEST_CASE("LaTeX rendering") {
  const SliceSchedule s(a2(), parse_sequence("(1)|(2)"));
  const auto tex = to_latex(s, gen_y_system(s));
  CHECK(tex.find("y_{1}(0)\\,y_{1}(2) &= \\frac{1}{(1+y_{2}(1)^{-1})}") != std::string::npos);
  const auto ttex = to_latex(s, gen_t_system(s, false));
  CHECK(ttex.find("x_{1}(0)\\,x_{1}(2) &= 1 + x_{2}(1)") != std::string::npos);
  const auto& e = get_entry("A4-level4");
  const auto g = catalog_schedule("A4-level4");
  const auto bal = to_latex(g, gen_t_system(g, false), e.labels, true);
  CHECK(bal.find("\\tilde{x}_{1,1}(0-1)\\,\\tilde{x}_{1,1}(0+1) &= \\tilde{x}_{2,1}(0) + \\tilde{x}_{1,2}(0)") !=
        std::string::npos);
  const SliceSchedule irregular(a3(), parse_sequence("((1)|(2))^5"));
  CHECK_THROWS_AS(to_latex(irregular, gen_y_system(irregular), {}, true), InvalidArgument);
}
