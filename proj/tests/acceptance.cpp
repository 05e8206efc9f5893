// Acceptance run: one PASS/FAIL line per primary criterion, with timings.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "periodica/catalog.hpp"
#include "periodica/dilog.hpp"
#include "periodica/periodicity.hpp"
#include "periodica/principal_seed.hpp"
#include "periodica/symbolic_seed.hpp"
#include "periodica/ty_system.hpp"
#include "support.hpp"

using namespace periodica;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// Times one check; returns the elapsed seconds.
template <typename F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return seconds_since(t0);
}

bool tropical(const ExchangeMatrix& b, const std::vector<int>& seq, const Permutation& nu = {}) {
  return check_seed_period_tropical(b, {seq, nu}).seed_periodic.value_or(false);
}
bool symbolic(const ExchangeMatrix& b, const std::vector<int>& seq, const Permutation& nu = {}) {
  return check_seed_period_symbolic(b, {seq, nu}).seed_periodic.value_or(false);
}

std::vector<int> flat(const CatalogEntry& e, const std::string& text) { return e.parse(text).flatten(); }

std::vector<int> repeat(const std::vector<int>& unit, int times) {
  std::vector<int> out;
  for (int k = 0; k < times; ++k) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

SliceSchedule ty_schedule(const CatalogEntry& e) { return SliceSchedule(e.b, e.parse(e.ty_slice), e.permutation(e.ty_permutation)); }

void p1(Outcome& o) {
  const auto& e = get_entry("A2");
  const auto five = repeat({0, 1}, 5), four = repeat({0, 1}, 4);
  bool t5 = false, s5 = false, t4 = true, s4 = true;
  const double t = timed([&] {
    t5 = tropical(e.b, five);
    s5 = symbolic(e.b, five);
    t4 = tropical(e.b, four);
    s4 = symbolic(e.b, four);
  });
  o.require(t5 && s5, "(1,2)^5 is a seed period");
  o.require(!t4 && !s4, "(1,2)^4 is not");
  o.require(t < 1.0, "runtime < 1 s");
  o.detail << "tropical+symbolic " << t << " s";
}

void p2(Outcome& o) {
  const auto& e = get_entry("A3");
  const auto omega = e.permutation("omega");
  bool trop = false, sym = false;
  const double tt = timed([&] {
    trop = tropical(e.b, flat(e, "i^6")) && tropical(e.b, flat(e, "i^3"), omega) && !tropical(e.b, flat(e, "i^5")) &&
           !tropical(e.b, flat(e, "i^2"), omega);
  });
  const double ts = timed([&] {
    sym = symbolic(e.b, flat(e, "i^6")) && symbolic(e.b, flat(e, "i^3"), omega) && !symbolic(e.b, flat(e, "i^5"));
  });
  o.require(trop, "tropical verdicts");
  o.require(sym, "symbolic verdicts");
  o.require(tt < 0.1, "tropical < 0.1 s");
  o.require(ts < 5.0, "symbolic < 5 s");
  o.detail << "tropical " << tt << " s, symbolic " << ts << " s";
}

void p3(Outcome& o) {
  const auto& e = get_entry("A4-level4");
  const auto i9 = flat(e, "i^9");
  bool yes = false, no = true;
  const double t = timed([&] {
    yes = tropical(e.b, i9);
    no = tropical(e.b, flat(e, "i^8"));
  });
  o.require(i9.size() == 108, "i^9 has 108 mutations");
  o.require(yes, "i^9 is a seed period");
  o.require(!no, "i^8 is not");
  o.require(t < 5.0, "runtime < 5 s");
  o.detail << e.n() << " vertices, " << i9.size() << " mutations, " << t << " s";
}

void p4(Outcome& o) {
  const auto& b4 = get_entry("B4-level4");
  const auto& sg = get_entry("sine-Gordon");
  bool b4_yes = false, sg_yes = false;
  const double tb = timed([&] { b4_yes = tropical(b4.b, flat(b4, "i^11")); });
  const double ts = timed([&] { sg_yes = tropical(sg.b, flat(sg, "i^13")); });
  o.require(b4.n() == 25, "(B4,4) has 25 vertices");
  o.require(b4_yes, "(B4,4) i^11 is a seed period");
  o.require(sg_yes, "sine-Gordon i^13 is a seed period");
  o.require(tb < 30.0, "(B4,4) < 30 s");
  // one repetition short is not a period (derived minimality)
  o.require(!tropical(b4.b, flat(b4, "i^10")), "(B4,4) i^10 is not");
  o.require(!tropical(sg.b, flat(sg, "i^12")), "sine-Gordon i^12 is not");
  o.detail << "(B4,4) " << tb << " s, sine-Gordon " << ts << " s";
}

void p5(Outcome& o) {
  const auto& e = get_entry("delPezzo3");
  const auto rho2 = e.permutation("rho^2");
  const auto i = flat(e, "i");
  bool m1 = false, m2 = false;
  std::optional<bool> seed;
  const double t = timed([&] {
    m1 = check_matrix_period(e.b, {flat(e, "(1,2)"), rho2});
    m2 = check_matrix_period(e.b, {i, {}});
    seed = check_seed_period_tropical(e.b, {i, {}}).seed_periodic;
  });
  o.require(i == std::vector<int>{0, 1, 2, 3, 4, 5}, "j((1,2), rho^2) = (1,...,6)");
  o.require(m1, "(1,2) is a rho^2-period of Q");
  o.require(m2, "(1,...,6) is a period of Q");
  o.detail << "matrix claims hold; seed-level check along (1,...,6) recorded as "
           << (seed.value_or(false) ? "periodic" : "not periodic") << "; " << t << " s";
}

void p6(Outcome& o) {
  const std::map<std::string, std::pair<long, long>> fixtures = {
      {"A2", {6, 4}},          {"A3", {12, 6}},           {"A4", {20, 8}},
      {"A4-level4", {48, 60}}, {"B4-level4", {152, 200}}, {"sine-Gordon", {468, 156}},
  };
  double worst = 0, spread = 0;
  int entries = 0;
  for (const auto& e : catalog()) {
    if (!e.seed_period) continue;
    ++entries;
    const SliceSchedule s(e.b, e.parse(e.period), e.permutation(e.period_permutation));
    const auto r = verify_identity(s, DilogOptions{.trials = 5});
    worst = std::max(worst, r.max_residual);
    spread = std::max(spread, r.spread);
    o.require(r.ok, e.name + " identities");
    o.require(r.n_plus + r.n_minus == r.sites, e.name + " N+ + N- = |S+|");
    const auto it = fixtures.find(e.name);
    o.require(it != fixtures.end() && it->second == std::pair{r.n_plus, r.n_minus}, e.name + " frozen N+-");
  }
  o.require(entries == 6, "six seed-period entries");
  o.detail << entries << " entries x 5 draws, max residual " << worst << ", max spread " << spread;
}

void p7(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> nd(1, 6), ld(1, 30);
  const auto saved = term_cap().load();
  term_cap() = 2000;
  int steps = 0, truncated = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(nd(rng));
    const auto b = testing_support::random_skew(rng, n, 1);
    std::uniform_int_distribution<int> kd(0, static_cast<int>(n) - 1);
    std::vector<int> seq;
    for (int step = 0, len = ld(rng), last = -1; step < len; ++step) {
      int k = kd(rng);
      while (n > 1 && k == last) k = kd(rng);
      seq.push_back(last = k);
    }
    auto run = [&](FTracking mode) {
      PrincipalSeed s(b, mode, 3);
      for (int k : seq) {
        const auto kk = static_cast<std::size_t>(k);
        s.mutate_in_place(kk);
        ++steps;
        const auto rep = check_positivity_assertions(s);
        o.require(s.c().transpose() * s.g() == IntMatrix::identity(n), "C^T G = I");
        o.require(rep.c_sign_pure && rep.g_rows_coherent && rep.f_constant_one, "sign purity / coherence / F(0) = 1");
        o.require(s.mutate(kk).mutate(kk) == s, "involution");
        if (!o.pass) return;
      }
      // commutation at every unconnected pair of the final seed
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (s.b()(j, k) == 0) o.require(s.mutate(j).mutate(k) == s.mutate(k).mutate(j), "b = 0 commutation");
    };
    try {
      run(FTracking::Full);
    } catch (const SizeCapExceeded&) {
      ++truncated;
      run(FTracking::Truncated);
    }
  }
  term_cap() = saved;
  o.detail << "100 matrices, " << steps << " checked steps, " << truncated << " with degree-3 truncated F";
}

void p8(Outcome& o) {
  const auto& a2 = get_entry("A2");
  const auto& a3 = get_entry("A3");
  int compared = 0;
  for (const auto& [b, seq] : std::vector<std::pair<ExchangeMatrix, std::vector<int>>>{{a2.b, flat(a2, a2.period)}, {a3.b, flat(a3, a3.period)}}) {
    PrincipalSeed p(b);
    SymbolicSeed s(b);
    for (int k : seq) {
      p.mutate_in_place(static_cast<std::size_t>(k));
      s.mutate_in_place(static_cast<std::size_t>(k));
      const auto r = separation_reconstruct(p);
      for (std::size_t i = 0; i < b.n(); ++i) {
        o.require(sfr_eq(r.x[i], s.x()[i].to_sfrational()), "x components");
        o.require(sfr_eq(r.y[i], s.y()[i].to_sfrational()), "y components");
        compared += 2;
      }
    }
  }
  o.detail << compared << " components equal along the A2 and A3 periods";
}

void p9(Outcome& o) {
  long pairs = 0;
  for (const char* name : {"A2", "A3", "A4-level4"}) {
    const auto s = ty_schedule(get_entry(name));
    const auto r = check_duality(s, gen_y_system(s), gen_t_system(s));
    o.require(r.ok, std::string(name) + " duality");
    pairs += static_cast<long>(r.pairs_checked);
  }
  o.detail << pairs << " site pairs, exact";
}

void p10(Outcome& o) {
  std::mt19937_64 rng(2010);
  double worst = 0;
  for (const char* name : {"A2", "A4-level4"}) {
    const auto s = ty_schedule(get_entry(name));
    const auto t = gen_t_system(s, false);
    for (int trial = 0; trial < 3; ++trial) {
      const auto r = y_from_t_check(s, t, log_uniform_draw(rng, s.n(), 0.1, 10.0), 4);
      worst = std::max(worst, r.max_residual);
      o.require(r.relations_checked > 0, "relations checked");
    }
  }
  o.require(worst < 1e-9, "residual < 1e-9");
  o.detail << "max residual " << worst;
}

void p11(Outcome& o) {
  const auto& a2 = get_entry("A2");
  const auto& a3 = get_entry("A3");
  const auto seq = repeat({0, 1}, 5);
  o.require(restrict(a3.b, {0, 1}) == a2.b, "A3 restricted to {1,2} is A2");
  const auto r = extend_check(a3.b, {0, 1}, {seq, {}});
  o.require(r.restricted.seed_periodic.value_or(false), "period of A2 (restriction side)");
  o.require(r.extended.seed_periodic.value_or(false), "period of A3 (extension side)");
  o.require(symbolic(a2.b, seq) && symbolic(a3.b, seq), "symbolic oracle on both");
  const auto bad = extend_check(a3.b, {0, 1}, {repeat({0, 1}, 4), {}});
  o.require(!bad.restricted.seed_periodic.value_or(true) && !bad.extended.seed_periodic.value_or(true), "(1,2)^4 fails on both");
  o.detail << "(1,2)^5 on A2 and A3, tropical and symbolic";
}

void p12(Outcome& o) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  o.require(rogers_L(0.0) == 0.0, "L(0) = 0");
  o.require(rogers_L(1.0) == pi2 / 6, "L(1) = pi^2/6");
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const double x = u(rng);
    worst = std::max(worst, std::abs(rogers_L(x) + rogers_L(1 - x) - pi2 / 6));
  }
  o.require(worst < 1e-12, "Euler relation < 1e-12");
  o.detail << "Euler residual " << worst << " on 100 points";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"P1 A2 seed period", p1},          {"P2 A3 period and omega-period", p2},  {"P3 (A4,4) i^9", p3},
      {"P4 (B4,4) i^11, sine-Gordon i^13", p4}, {"P5 del Pezzo 3 matrix periods", p5}, {"P6 dilogarithm identities", p6},
      {"P7 fuzzed structural invariants", p7},  {"P8 separation formulas", p8},       {"P9 T/Y duality", p9},
      {"P10 Y from T", p10},              {"P11 restriction/extension", p11},     {"P12 Rogers dilogarithm", p12},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double t = seconds_since(t0);
    if (!o.pass) ++failed;
    std::printf("%s  %-36s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", name, t, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
