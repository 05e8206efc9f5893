#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "periodica/error.hpp"
#include "periodica/exchange_matrix.hpp"
#include "periodica/principal_seed.hpp"
#include "periodica/symbolic_seed.hpp"

namespace periodica {

using Permutation = std::vector<int>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline void validate_permutation(const Permutation& nu, std::size_t n) {
  if (nu.size() != n) throw InvalidArgument("permutation has length " + std::to_string(nu.size()) + ", expected " + std::to_string(n));
  std::vector<bool> hit(n, false);
  for (int v : nu) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)])
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    hit[static_cast<std::size_t>(v)] = true;
  }
}

inline Permutation compose(const Permutation& a, const Permutation& b) {  // a after b
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline int permutation_order(const Permutation& nu) {
  Permutation p = nu;
  const Permutation id = identity_permutation(nu.size());
  int g = 1;
  while (p != id) {
    p = compose(nu, p);
    ++g;
  }
  return g;
}

/// Index sequence i with a relabeling nu (empty nu means identity).
struct NuPeriodSpec {
  std::vector<int> seq;
  Permutation nu;

  Permutation nu_or_identity(std::size_t n) const { return nu.empty() ? identity_permutation(n) : nu; }
  int order(std::size_t n) const { return permutation_order(nu_or_identity(n)); }
};

inline void validate_spec(const NuPeriodSpec& spec, std::size_t n) {
  for (int k : spec.seq)
    if (k < 0 || static_cast<std::size_t>(k) >= n)
      throw InvalidArgument("sequence index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
  if (!spec.nu.empty()) validate_permutation(spec.nu, n);
}

struct PeriodVerdict {
  bool matrix_periodic = false;
  std::optional<bool> seed_periodic;  ///< empty when not decided
  std::string method;                 ///< "tropical" or "symbolic"
  bool conjectural = false;           ///< tropical verdict on a non-skew-symmetric matrix
  /// First failing pair: matrix entry (i, j), or for seeds (variable kind, index).
  std::optional<std::pair<int, int>> witness;
  std::string witness_kind;
};

/// First (i, j) with b''_{nu(i) nu(j)} != b_ij, if any.
inline std::optional<std::pair<int, int>> matrix_period_witness(const ExchangeMatrix& b, const ExchangeMatrix& after,
                                                               const Permutation& nu) {
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j)
      if (after(static_cast<std::size_t>(nu[i]), static_cast<std::size_t>(nu[j])) != b(i, j))
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

inline ExchangeMatrix apply_matrix(const ExchangeMatrix& b, const std::vector<int>& seq) {
  ExchangeMatrix m = b;
  for (int k : seq) m = m.mutate(static_cast<std::size_t>(k));
  return m;
}

inline bool check_matrix_period(const ExchangeMatrix& b, const NuPeriodSpec& spec) {
  validate_spec(spec, b.n());
  return !matrix_period_witness(b, apply_matrix(b, spec.seq), spec.nu_or_identity(b.n())).has_value();
}

/// Seed periodicity through c-vectors only: [y''_{nu(i)}]_T must equal y_i.
inline PeriodVerdict check_seed_period_tropical(const ExchangeMatrix& b, const NuPeriodSpec& spec) {
  validate_spec(spec, b.n());
  const std::size_t n = b.n();
  const Permutation nu = spec.nu_or_identity(n);
  PeriodVerdict v;
  v.method = "tropical";
  v.conjectural = !b.is_skew_symmetric();
  const PrincipalSeed s = PrincipalSeed(b, FTracking::Off).apply(spec.seq);
  const auto mw = matrix_period_witness(b, s.b(), nu);
  v.matrix_periodic = !mw.has_value();
  for (std::size_t i = 0; i < n && !v.witness; ++i)
    for (std::size_t r = 0; r < n; ++r)
      if (s.c()(r, static_cast<std::size_t>(nu[i])) != (r == i ? 1 : 0)) {
        v.witness = std::make_pair(static_cast<int>(i), static_cast<int>(r));
        v.witness_kind = "c-vector";
        break;
      }
  if (!v.witness && mw) {
    v.witness = mw;
    v.witness_kind = "matrix";
  }
  v.seed_periodic = !v.witness.has_value();
  return v;
}

/// Seed periodicity by full symbolic mutation and exact comparison.
inline PeriodVerdict check_seed_period_symbolic(const ExchangeMatrix& b, const NuPeriodSpec& spec) {
  validate_spec(spec, b.n());
  const std::size_t n = b.n();
  const Permutation nu = spec.nu_or_identity(n);
  PeriodVerdict v;
  v.method = "symbolic";
  const SymbolicSeed start(b);
  const SymbolicSeed s = start.apply(spec.seq);
  const auto mw = matrix_period_witness(b, s.b(), nu);
  v.matrix_periodic = !mw.has_value();
  for (std::size_t i = 0; i < n && !v.witness; ++i) {
    const std::size_t j = static_cast<std::size_t>(nu[i]);
    if (!(s.x()[j] == start.x()[i])) {
      v.witness = std::make_pair(0, static_cast<int>(i));
      v.witness_kind = "x";
    } else if (!(s.y()[j] == start.y()[i])) {
      v.witness = std::make_pair(1, static_cast<int>(i));
      v.witness_kind = "y";
    }
  }
  if (!v.witness && mw) {
    v.witness = mw;
    v.witness_kind = "matrix";
  }
  v.seed_periodic = !v.witness.has_value();
  return v;
}

/// j(i, nu) = i | nu(i) | ... | nu^{g-1}(i).
inline std::vector<int> build_j_period(const NuPeriodSpec& spec, std::size_t n) {
  const Permutation nu = spec.nu_or_identity(n);
  const int g = permutation_order(nu);
  std::vector<int> out;
  Permutation p = identity_permutation(n);
  for (int m = 0; m < g; ++m) {
    for (int k : spec.seq) out.push_back(p[static_cast<std::size_t>(k)]);
    p = compose(nu, p);
  }
  return out;
}

inline ExchangeMatrix restrict(const ExchangeMatrix& big, const std::vector<int>& subset) { return big.submatrix(subset); }

struct ExtensionReport {
  PeriodVerdict restricted;  ///< verdict on B (the submatrix)
  PeriodVerdict extended;    ///< verdict on the full matrix
  bool consistent = false;   ///< both seed verdicts agree
};

/// Runs the same period on B = big restricted to `subset` and on big itself.
/// The spec is written in the labels of B; nu is extended by the identity.
inline ExtensionReport extend_check(const ExchangeMatrix& big, const std::vector<int>& subset, const NuPeriodSpec& spec) {
  const ExchangeMatrix small = restrict(big, subset);
  validate_spec(spec, small.n());
  NuPeriodSpec lifted;
  for (int k : spec.seq) lifted.seq.push_back(subset[static_cast<std::size_t>(k)]);
  if (!spec.nu.empty()) {
    lifted.nu = identity_permutation(big.n());
    for (std::size_t a = 0; a < subset.size(); ++a)
      lifted.nu[static_cast<std::size_t>(subset[a])] = subset[static_cast<std::size_t>(spec.nu[a])];
  }
  ExtensionReport r;
  r.restricted = check_seed_period_tropical(small, spec);
  r.extended = check_seed_period_tropical(big, lifted);
  r.consistent = r.restricted.seed_periodic == r.extended.seed_periodic;
  return r;
}

/// Checks that a seed period of B is also one of -B.
inline bool opposite_period_check(const ExchangeMatrix& b, const NuPeriodSpec& spec) {
  return check_seed_period_tropical(b.opposite(), spec).seed_periodic.value_or(false);
}

/// All nu with b''_{nu(i) nu(j)} = b_ij after mutating along seq, up to a
/// result limit. Backtracking over vertex assignments with degree pruning.
inline std::vector<Permutation> enumerate_nu(const ExchangeMatrix& b, const std::vector<int>& seq, std::size_t limit = 1000) {
  const std::size_t n = b.n();
  const ExchangeMatrix after = apply_matrix(b, seq);
  auto signature = [n](const ExchangeMatrix& m, std::size_t i) {
    std::vector<Int> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(m(i, j));
    std::sort(row.begin(), row.end());
    return row;
  };
  std::vector<std::vector<Int>> sb(n), sa(n);
  for (std::size_t i = 0; i < n; ++i) {
    sb[i] = signature(b, i);
    sa[i] = signature(after, i);
  }
  std::vector<Permutation> out;
  Permutation nu(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == n) {
      out.push_back(nu);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sa[c] != sb[i]) continue;
      bool ok = after(c, c) == b(i, i);
      for (std::size_t p = 0; p < i && ok; ++p) {
        const std::size_t q = static_cast<std::size_t>(nu[p]);
        ok = after(c, q) == b(i, p) && after(q, c) == b(p, i);
      }
      if (!ok) continue;
      nu[i] = static_cast<int>(c);
      used[c] = true;
      rec(i + 1);
      used[c] = false;
    }
    nu[i] = -1;
  };
  rec(0);
  return out;
}

struct FoundPeriod {
  std::vector<int> seq;
  Permutation nu;
};

/// Seed period check along seq by c-vectors, returning nu when C ends as a
/// permutation matrix compatible with B.
inline std::optional<Permutation> closing_permutation(const ExchangeMatrix& b, const std::vector<int>& seq) {
  const std::size_t n = b.n();
  const PrincipalSeed s = PrincipalSeed(b, FTracking::Off).apply(seq);
  Permutation nu(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    int row = -1;
    for (std::size_t r = 0; r < n; ++r) {
      if (s.c()(r, j) == 1 && row < 0) row = static_cast<int>(r);
      else if (s.c()(r, j) != 0) return std::nullopt;
    }
    if (row < 0 || nu[static_cast<std::size_t>(row)] >= 0) return std::nullopt;
    nu[static_cast<std::size_t>(row)] = static_cast<int>(j);
  }
  if (matrix_period_witness(b, s.b(), nu)) return std::nullopt;
  return nu;
}

/// Breadth-first search for seed nu-periods by c-vectors. States whose C
/// matrices agree up to column order are identified; when a new state meets
/// a stored one, the two paths close a cycle through the initial seed, which
/// is then verified directly. Children of a level are computed on worker
/// threads and merged in frontier order, so results are deterministic.
inline std::vector<FoundPeriod> find_period(const ExchangeMatrix& b, std::size_t max_length, std::size_t max_results = 1,
                                            unsigned threads = std::max(1U, std::thread::hardware_concurrency())) {
  const std::size_t n = b.n();
  using Key = std::vector<std::vector<Int>>;
  struct Node {
    PrincipalSeed seed;
    std::vector<int> seq;
  };
  auto key = [n](const IntMatrix& c) {
    Key cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(c.column(j));
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  std::vector<Node> stored{{PrincipalSeed(b, FTracking::Off), {}}};
  std::map<Key, std::size_t> seen{{key(IntMatrix::identity(n)), 0}};
  std::vector<std::size_t> frontier{0};
  std::vector<FoundPeriod> found;
  std::set<std::vector<int>> found_seqs;

  // path a (ending in state sa) meets stored path b (state sb ~ sa)
  auto close = [&](const Node& a, const Node& other) -> std::optional<std::vector<int>> {
    Permutation pi(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
      const auto col = other.seed.c().column(j);
      for (std::size_t m = 0; m < n; ++m)
        if (a.seed.c().column(m) == col) pi[j] = static_cast<int>(m);
      if (pi[j] < 0) return std::nullopt;
    }
    std::vector<int> seq = a.seq;
    for (auto it = other.seq.rbegin(); it != other.seq.rend(); ++it) {
      const int k = pi[static_cast<std::size_t>(*it)];
      if (!seq.empty() && seq.back() == k) seq.pop_back();  // mutation is an involution
      else seq.push_back(k);
    }
    if (seq.empty() || seq.size() > max_length) return std::nullopt;
    return seq;
  };

  for (std::size_t depth = 1; depth <= max_length && !frontier.empty() && found.size() < max_results; ++depth) {
    std::vector<std::vector<Node>> children(frontier.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t f = lo; f < hi; ++f) {
        const Node& node = stored[frontier[f]];
        for (std::size_t k = 0; k < n; ++k) {
          if (!node.seq.empty() && node.seq.back() == static_cast<int>(k)) continue;
          Node ch{node.seed.mutate(k), node.seq};
          ch.seq.push_back(static_cast<int>(k));
          children[f].push_back(std::move(ch));
        }
      }
    };
    const std::size_t chunks = std::min<std::size_t>(threads, frontier.size());
    if (chunks <= 1) {
      work(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t step = (frontier.size() + chunks - 1) / chunks;
      for (std::size_t lo = 0; lo < frontier.size(); lo += step) pool.emplace_back(work, lo, std::min(frontier.size(), lo + step));
      for (auto& t : pool) t.join();
    }
    std::vector<std::vector<int>> candidates;
    std::vector<std::size_t> next;
    for (auto& group : children)
      for (auto& ch : group) {
        Key kk = key(ch.seed.c());
        auto it = seen.find(kk);
        if (it != seen.end()) {
          if (auto cand = close(ch, stored[it->second])) candidates.push_back(std::move(*cand));
          continue;
        }
        seen.emplace(std::move(kk), stored.size());
        next.push_back(stored.size());
        stored.push_back(std::move(ch));
      }
    std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    for (auto& cand : candidates) {
      if (found_seqs.count(cand)) continue;
      if (auto nu = closing_permutation(b, cand)) {
        found_seqs.insert(cand);
        found.push_back({std::move(cand), std::move(*nu)});
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](const FoundPeriod& a, const FoundPeriod& b) {
    return a.seq.size() != b.seq.size() ? a.seq.size() < b.seq.size() : a.seq < b.seq;
  });
  if (found.size() > max_results) found.resize(max_results);
  return found;
}

}  // namespace periodica
