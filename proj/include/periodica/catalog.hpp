#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "periodica/error.hpp"
#include "periodica/exchange_matrix.hpp"
#include "periodica/periodicity.hpp"
#include "periodica/sequence.hpp"

namespace periodica {

/// A machine-checkable periodicity statement about a catalog entry.
struct Claim {
  std::string sequence;     ///< sequence notation, may use the entry's names
  std::string permutation;  ///< permutation expression, e.g. "id", "nu*omega", "rho^2"
  std::string level;        ///< "matrix" or "seed"
  bool expected = true;     ///< false for the one-repetition-short minimality checks
  bool asserted = true;     ///< false when the result is only recorded
  std::string note;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> labels;  ///< display label per vertex
  ExchangeMatrix b;
  std::map<std::string, Permutation> permutations;
  NamedSequences sequences;
  std::string period;  ///< default seed (or matrix) period used by T/Y and dilog
  std::string period_permutation = "id";
  bool seed_period = true;  ///< whether `period` is a seed period
  std::string ty_slice;     ///< slice of a nu-period used for T- and Y-systems
  std::string ty_permutation = "id";
  std::vector<Claim> claims;
  std::map<std::string, long> metadata;
  bool figure_transcribed = false;

  std::size_t n() const { return b.n(); }

  int index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InvalidArgument("unknown vertex label '" + label + "' in " + name);
    return static_cast<int>(it - labels.begin());
  }

  SlicedSequence parse(const std::string& text) const { return parse_sequence(text, sequences); }

  /// Evaluates products of named permutations: "nu*omega", "rho^2", "id".
  Permutation permutation(const std::string& expr) const {
    Permutation acc = identity_permutation(n());
    std::size_t pos = 0;
    while (pos < expr.size()) {
      std::size_t end = expr.find('*', pos);
      if (end == std::string::npos) end = expr.size();
      std::string tok = expr.substr(pos, end - pos);
      int power = 1;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        power = std::stoi(tok.substr(caret + 1));
        tok = tok.substr(0, caret);
      }
      Permutation p = identity_permutation(n());
      if (tok != "id") {
        auto it = permutations.find(tok);
        if (it == permutations.end()) throw InvalidArgument("unknown permutation '" + tok + "' in " + name);
        p = it->second;
      }
      for (int k = 0; k < power; ++k) acc = compose(p, acc);
      pos = end + 1;
    }
    return acc;
  }
};

namespace catalog_detail {

using Arrow = std::tuple<std::string, std::string, long long>;

inline ExchangeMatrix build(const std::vector<std::string>& labels, const std::vector<Arrow>& arrows) {
  std::vector<std::tuple<int, int, long long>> list;
  auto idx = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw InvalidArgument("catalog arrow uses unknown vertex " + l);
    return static_cast<int>(it - labels.begin());
  };
  for (const auto& [a, b, m] : arrows) list.emplace_back(idx(a), idx(b), m);
  return Quiver::from_list(static_cast<int>(labels.size()), list).to_matrix();
}

inline std::string pair_label(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

inline SlicedSequence slice_of(const CatalogEntry& e, const std::vector<std::string>& labels) {
  SlicedSequence s;
  s.slices.emplace_back();
  for (const auto& l : labels) s.slices.back().push_back(e.index_of(l));
  return s;
}

inline Permutation perm_from_labels(const CatalogEntry& e, const std::function<std::string(const std::string&)>& f) {
  Permutation p(e.n());
  for (std::size_t v = 0; v < e.n(); ++v) p[v] = e.index_of(f(e.labels[v]));
  return p;
}

inline std::pair<int, int> parse_pair(const std::string& l) {
  const auto comma = l.find(',');
  return {std::stoi(l.substr(1, comma - 1)), std::stoi(l.substr(comma + 1, l.size() - comma - 2))};
}

inline std::vector<std::string> numbered(int n) {
  std::vector<std::string> v;
  for (int k = 1; k <= n; ++k) v.push_back(std::to_string(k));
  return v;
}

inline CatalogEntry a2() {
  CatalogEntry e;
  e.name = "A2";
  e.description = "A_2 path quiver 1->2 with bipartite period";
  e.labels = numbered(2);
  e.b = build(e.labels, {{"1", "2", 1}});
  e.sequences["i+"] = slice_of(e, {"1"});
  e.sequences["i-"] = slice_of(e, {"2"});
  e.sequences["i"] = e.parse("i+|i-");
  e.permutations["nu"] = {1, 0};
  e.period = "i^5";
  e.ty_slice = "i";
  e.claims = {{"i+", "nu", "matrix", true, true, "i+ is a nu-period of Q"},
              {"i", "id", "matrix", true, true, "i = i+|i- is a period of Q"},
              {"i^2|i+", "nu", "seed", true, true, "i^{n/2+1}|i+ is a nu-period of (Q,x,y)"},
              {"i^1|i+", "nu", "seed", false, true, "one repetition short"},
              {"i^5", "id", "seed", true, true, "i^{n+3} is a period of (Q,x,y), n = 2"},
              {"i^4", "id", "seed", false, true, "one repetition short"}};
  e.metadata = {{"n", 2}, {"claimed_repetitions", 5}, {"h", 3}};
  return e;
}

inline CatalogEntry a3() {
  CatalogEntry e;
  e.name = "A3";
  e.description = "A_3 path quiver 1->2<-3 (odd case)";
  e.labels = numbered(3);
  e.b = build(e.labels, {{"1", "2", 1}, {"3", "2", 1}});
  e.permutations["omega"] = {2, 1, 0};
  e.sequences["i+"] = slice_of(e, {"1", "3"});
  e.sequences["i-"] = slice_of(e, {"2"});
  e.sequences["i"] = e.parse("i+|i-");
  e.period = "i^6";
  e.ty_slice = "i";
  e.claims = {{"i", "id", "matrix", true, true, "i is a period of Q"},
              {"i^6", "id", "seed", true, true, "i^{n+3} is a period of (Q,x,y), n = 3"},
              {"i^5", "id", "seed", false, true, "one repetition short"},
              {"i^3", "omega", "seed", true, true, "i^{(n+3)/2} is an omega-period of (Q,x,y)"},
              {"i^2", "omega", "seed", false, true, "one repetition short"}};
  e.metadata = {{"n", 3}, {"claimed_repetitions", 6}, {"h", 4}};
  return e;
}

inline CatalogEntry a4() {
  CatalogEntry e;
  e.name = "A4";
  e.description = "A_4 path quiver 1->2<-3->4 (even case)";
  e.labels = numbered(4);
  e.b = build(e.labels, {{"1", "2", 1}, {"3", "2", 1}, {"3", "4", 1}});
  e.permutations["nu"] = {3, 2, 1, 0};
  e.sequences["i+"] = slice_of(e, {"1", "3"});
  e.sequences["i-"] = slice_of(e, {"2", "4"});
  e.sequences["i"] = e.parse("i+|i-");
  e.period = "i^7";
  e.ty_slice = "i+";
  e.ty_permutation = "nu";
  e.claims = {{"i+", "nu", "matrix", true, true, "i+ is a nu-period of Q"},
              {"i", "id", "matrix", true, true, "i is a period of Q"},
              {"i^3|i+", "nu", "seed", true, true, "i^{n/2+1}|i+ is a nu-period of (Q,x,y)"},
              {"i^2|i+", "nu", "seed", false, true, "one repetition short"},
              {"i^7", "id", "seed", true, true, "i^{n+3} is a period of (Q,x,y), n = 4"},
              {"i^6", "id", "seed", false, true, "one repetition short"}};
  e.metadata = {{"n", 4}, {"claimed_repetitions", 7}, {"h", 5}};
  return e;
}

inline CatalogEntry del_pezzo3() {
  CatalogEntry e;
  e.name = "delPezzo3";
  e.description = "quiver of the gauge theory on the del Pezzo 3 surface";
  e.labels = numbered(6);
  e.b = build(e.labels, {{"5", "4", 1}, {"6", "5", 1}, {"3", "2", 1}, {"2", "1", 1}, {"5", "2", 2}, {"1", "5", 1},
                         {"3", "5", 1}, {"2", "4", 1}, {"2", "6", 1}, {"4", "1", 1}, {"6", "3", 1}, {"4", "6", 1},
                         {"1", "3", 1}});
  e.permutations["rho"] = {1, 2, 3, 4, 5, 0};
  e.sequences["i"] = e.parse("(1,2)|(3,4)|(5,6)");
  e.period = "(1,2)";
  e.period_permutation = "rho^2";
  e.ty_slice = "(1)|(2)";
  e.ty_permutation = "rho^2";
  e.seed_period = false;
  e.claims = {{"(1,2)", "rho^2", "matrix", true, true, "(1,2) is a rho^2-period of Q"},
              {"i", "id", "matrix", true, true, "i = j((1,2), rho^2) is a period of Q"}};
  e.metadata = {{"rho_order", 6}};
  return e;
}

/// (A_4, 4): vertex (i,j) sits in column i = 1..4, row j = 1..3.
inline CatalogEntry a4_level4() {
  CatalogEntry e;
  e.name = "A4-level4";
  e.description = "(A_4, 4) grid quiver, 12 vertices (column i, row j)";
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 3; ++j) e.labels.push_back(pair_label(i, j));
  auto P = pair_label;
  e.b = build(e.labels, {{P(1, 1), P(1, 2), 1}, {P(1, 3), P(1, 2), 1}, {P(2, 2), P(2, 1), 1}, {P(2, 2), P(2, 3), 1},
                         {P(3, 1), P(3, 2), 1}, {P(3, 3), P(3, 2), 1}, {P(4, 2), P(4, 1), 1}, {P(4, 2), P(4, 3), 1},
                         {P(2, 1), P(1, 1), 1}, {P(2, 1), P(3, 1), 1}, {P(4, 1), P(3, 1), 1}, {P(1, 2), P(2, 2), 1},
                         {P(3, 2), P(2, 2), 1}, {P(3, 2), P(4, 2), 1}, {P(2, 3), P(1, 3), 1}, {P(2, 3), P(3, 3), 1},
                         {P(4, 3), P(3, 3), 1}});
  std::vector<std::string> plus, minus;
  for (const auto& l : e.labels) {
    const auto [i, j] = parse_pair(l);
    ((i + j) % 2 == 0 ? plus : minus).push_back(l);
  }
  e.sequences["i+"] = slice_of(e, plus);
  e.sequences["i-"] = slice_of(e, minus);
  e.sequences["i"] = e.parse("i+|i-");
  e.permutations["nu"] = perm_from_labels(e, [](const std::string& l) {
    const auto [i, j] = parse_pair(l);
    return pair_label(5 - i, j);
  });
  e.permutations["omega"] = perm_from_labels(e, [](const std::string& l) {
    const auto [i, j] = parse_pair(l);
    return pair_label(i, 4 - j);
  });
  e.period = "i^9";
  e.ty_slice = "i+";
  e.ty_permutation = "nu";
  e.claims = {{"i+", "nu", "matrix", true, true, "i+ is a nu-period of Q"},
              {"i", "id", "matrix", true, true, "i is a period of Q"},
              {"i^4|i+", "nu*omega", "seed", true, true, "i^4|i+ is a nu omega-period of (Q,x,y)"},
              {"i^9", "id", "seed", true, true, "i^9 is a period of (Q,x,y), 9 = h(A4) + l"},
              {"i^8", "id", "seed", false, true, "one repetition short"}};
  e.metadata = {{"h", 5}, {"level", 4}, {"claimed_repetitions", 9}};
  return e;
}

/// (B_4, 4): white vertices (i,j) for i in {1,2,3,5,6,7}, j = 1..3; black
/// vertices (4,j), j = 1..7.
inline CatalogEntry b4_level4() {
  CatalogEntry e;
  e.name = "B4-level4";
  e.description = "(B_4, 4) quiver, 25 vertices; whites (i,j) i != 4, blacks (4,j)";
  for (int i : {1, 2, 3}) for (int j = 1; j <= 3; ++j) e.labels.push_back(pair_label(i, j));
  for (int j = 1; j <= 7; ++j) e.labels.push_back(pair_label(4, j));
  for (int i : {5, 6, 7}) for (int j = 1; j <= 3; ++j) e.labels.push_back(pair_label(i, j));
  auto P = pair_label;
  e.b = build(e.labels, {
      // row 1
      {P(1, 1), P(2, 1), 1}, {P(3, 1), P(2, 1), 1}, {P(4, 2), P(3, 1), 1}, {P(4, 2), P(5, 1), 1},
      {P(6, 1), P(5, 1), 1}, {P(6, 1), P(7, 1), 1},
      // row 2
      {P(2, 2), P(1, 2), 1}, {P(2, 2), P(3, 2), 1}, {P(4, 4), P(3, 2), 1}, {P(4, 4), P(5, 2), 1},
      {P(5, 2), P(6, 2), 1}, {P(7, 2), P(6, 2), 1},
      // row 3
      {P(1, 3), P(2, 3), 1}, {P(3, 3), P(2, 3), 1}, {P(4, 6), P(3, 3), 1}, {P(4, 6), P(5, 3), 1},
      {P(6, 3), P(5, 3), 1}, {P(6, 3), P(7, 3), 1},
      // black column
      {P(4, 1), P(4, 2), 1}, {P(4, 3), P(4, 2), 1}, {P(4, 3), P(4, 4), 1}, {P(4, 5), P(4, 4), 1},
      {P(4, 5), P(4, 6), 1}, {P(4, 7), P(4, 6), 1},
      // diagonals
      {P(3, 1), P(4, 1), 1}, {P(3, 1), P(4, 3), 1}, {P(3, 3), P(4, 5), 1}, {P(3, 3), P(4, 7), 1},
      {P(5, 2), P(4, 3), 1}, {P(5, 2), P(4, 5), 1},
      // white verticals
      {P(1, 2), P(1, 1), 1}, {P(2, 1), P(2, 2), 1}, {P(3, 2), P(3, 1), 1}, {P(5, 1), P(5, 2), 1},
      {P(6, 2), P(6, 1), 1}, {P(7, 1), P(7, 2), 1}, {P(1, 2), P(1, 3), 1}, {P(2, 3), P(2, 2), 1},
      {P(3, 2), P(3, 3), 1}, {P(5, 3), P(5, 2), 1}, {P(6, 2), P(6, 3), 1}, {P(7, 3), P(7, 2), 1}});
  const std::vector<std::string> bp{P(4, 1), P(4, 3), P(4, 5), P(4, 7)}, bm{P(4, 2), P(4, 4), P(4, 6)};
  const std::vector<std::string> wp{P(1, 2), P(2, 1), P(2, 3), P(3, 2), P(5, 1), P(5, 3), P(6, 2), P(7, 1), P(7, 3)};
  std::vector<std::string> wm;
  for (const auto& l : e.labels)
    if (parse_pair(l).first != 4 && std::find(wp.begin(), wp.end(), l) == wp.end()) wm.push_back(l);
  e.sequences["ib+"] = slice_of(e, bp);
  e.sequences["ib-"] = slice_of(e, bm);
  e.sequences["iw+"] = slice_of(e, wp);
  e.sequences["iw-"] = slice_of(e, wm);
  e.sequences["h"] = e.parse("ib+|iw+|ib-");
  e.sequences["i"] = e.parse("(ib+|iw+|ib-)|(ib+|iw-|ib-)");
  e.permutations["nu"] = perm_from_labels(e, [](const std::string& l) {
    const auto [i, j] = parse_pair(l);
    return pair_label(8 - i, j);
  });
  e.permutations["omega"] = perm_from_labels(e, [](const std::string& l) {
    const auto [i, j] = parse_pair(l);
    return pair_label(i, (i == 4 ? 8 : 4) - j);
  });
  e.period = "i^11";
  e.ty_slice = "(ib+,iw+)|ib-";
  e.ty_permutation = "nu";
  e.claims = {{"h", "nu", "matrix", true, true, "ib+|iw+|ib- is a nu-period of Q"},
              {"i", "id", "matrix", true, true, "i is a period of Q"},
              {"i^5|h", "nu*omega", "seed", true, true, "i^5|(ib+|iw+|ib-) is a nu omega-period of (Q,x,y)"},
              {"i^11", "id", "seed", true, true, "i^11 is a period of (Q,x,y), 11 = h^vee(B4) + l"},
              {"i^10", "id", "seed", false, true, "one repetition short"}};
  e.metadata = {{"h_dual", 7}, {"level", 4}, {"claimed_repetitions", 11}};
  return e;
}

/// Sine-Gordon quiver of type D_13-like shape, vertices 1..13.
inline CatalogEntry sine_gordon() {
  CatalogEntry e;
  e.name = "sine-Gordon";
  e.description = "sine-Gordon quiver, 13 vertices; 7..13 form the black column";
  e.labels = numbered(13);
  e.b = build(e.labels, {{"8", "7", 1}, {"8", "9", 1}, {"10", "9", 1}, {"10", "11", 1}, {"12", "11", 1},
                         {"13", "11", 1}, {"7", "1", 1}, {"2", "8", 1}, {"9", "2", 1}, {"3", "10", 1},
                         {"11", "3", 1}, {"4", "12", 1}, {"11", "4", 1}, {"4", "13", 1}, {"5", "10", 1},
                         {"9", "5", 1}, {"7", "6", 1}, {"6", "8", 1}});
  e.sequences["ib+"] = e.parse("8,10,12,13");
  e.sequences["ib+"].slices = {{7, 9, 11, 12}};
  e.sequences["ib-"].slices = {{6, 8, 10}};
  SlicedSequence full;
  for (int k = 0; k < 6; ++k) {
    full.slices.push_back({7, 9, 11, 12});
    full.slices.push_back({k});
    full.slices.push_back({6, 8, 10});
  }
  e.sequences["i"] = full;
  e.sequences["h"] = e.parse("ib+|1|ib-");
  e.permutations["nu"] = {1, 2, 3, 4, 5, 0, 6, 7, 8, 9, 10, 11, 12};
  e.permutations["omega"] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 11};
  e.period = "i^13";
  e.ty_slice = "(ib+,1)|ib-";
  e.ty_permutation = "nu";
  e.claims = {{"h", "nu", "matrix", true, true, "ib+|(1)|ib- is a nu-period of Q"},
              {"i", "id", "matrix", true, true, "i is a period of Q"},
              {"i^2|h", "nu*omega", "seed", true, true, "i^2|(ib+|(1)|ib-) is a nu omega-period of (Q,x,y)"},
              {"i^13", "id", "seed", true, true, "i^13 is a period of (Q,x,y), 13 = (h(D7)+2+h(D6)+2)/2"},
              {"i^12", "id", "seed", false, true, "one repetition short"}};
  e.metadata = {{"claimed_repetitions", 13}};
  return e;
}

/// Level-4 tamely laced quiver glued from five copies Q1..Q5 sharing one
/// black column b1..b19 (odd b_k are sources within the column).
inline CatalogEntry tamely_laced() {
  CatalogEntry e;
  e.name = "tamely-laced-level4";
  e.description = "five glued copies with a shared black column; transcribed from a figure";
  e.figure_transcribed = true;
  for (int q = 1; q <= 5; ++q)
    for (int w = 1; w <= 3; ++w) e.labels.push_back("Q" + std::to_string(q) + "w" + std::to_string(w));
  for (int k = 1; k <= 19; ++k) e.labels.push_back("b" + std::to_string(k));
  // per copy: (tail, head) with 'w'/'b' names local to the copy
  const std::vector<std::vector<std::pair<std::string, std::string>>> copies = {
      {{"w2", "w1"}, {"w2", "w3"}, {"w1", "b1"}, {"b2", "w1"}, {"w1", "b3"}, {"b4", "w1"}, {"w1", "b5"},
       {"b6", "w1"}, {"w1", "b7"}, {"b8", "w1"}, {"w1", "b9"}, {"b10", "w2"}, {"w3", "b11"}, {"b12", "w3"},
       {"w3", "b13"}, {"b14", "w3"}, {"w3", "b15"}, {"b16", "w3"}, {"w3", "b17"}, {"b18", "w3"}, {"w3", "b19"}},
      {{"w1", "w2"}, {"w3", "w2"}, {"b2", "w1"}, {"w1", "b3"}, {"b4", "w1"}, {"w1", "b5"}, {"b6", "w1"},
       {"w1", "b7"}, {"b8", "w1"}, {"w2", "b9"}, {"b10", "w2"}, {"w2", "b11"}, {"b12", "w3"}, {"w3", "b13"},
       {"b14", "w3"}, {"w3", "b15"}, {"b16", "w3"}, {"w3", "b17"}, {"b18", "w3"}},
      {{"w2", "w1"}, {"w2", "w3"}, {"w1", "b3"}, {"b4", "w1"}, {"w1", "b5"}, {"b6", "w1"}, {"w1", "b7"},
       {"b8", "w2"}, {"w2", "b9"}, {"b10", "w2"}, {"w2", "b11"}, {"b12", "w2"}, {"w3", "b13"}, {"b14", "w3"},
       {"w3", "b15"}, {"b16", "w3"}, {"w3", "b17"}},
      {{"w1", "w2"}, {"w3", "w2"}, {"b4", "w1"}, {"w1", "b5"}, {"b6", "w1"}, {"w2", "b7"}, {"b8", "w2"},
       {"w2", "b9"}, {"b10", "w2"}, {"w2", "b11"}, {"w2", "b13"}, {"b12", "w2"}, {"b14", "w3"}, {"w3", "b15"},
       {"b16", "w3"}},
      {{"w2", "w1"}, {"w2", "w3"}, {"w1", "b5"}, {"b6", "w2"}, {"w2", "b7"}, {"b8", "w2"}, {"w2", "b9"},
       {"b10", "w2"}, {"w2", "b11"}, {"b12", "w2"}, {"w2", "b13"}, {"b14", "w2"}, {"w3", "b15"}}};
  std::vector<Arrow> arrows;
  for (std::size_t q = 0; q < copies.size(); ++q) {
    auto full = [q](const std::string& v) { return v[0] == 'w' ? "Q" + std::to_string(q + 1) + v : v; };
    for (const auto& [a, b] : copies[q]) arrows.emplace_back(full(a), full(b), 1);
  }
  for (int k = 1; k <= 19; k += 2) {
    if (k > 1) arrows.emplace_back("b" + std::to_string(k), "b" + std::to_string(k - 1), 1);
    if (k < 19) arrows.emplace_back("b" + std::to_string(k), "b" + std::to_string(k + 1), 1);
  }
  e.b = build(e.labels, arrows);
  const std::vector<std::string> signs = {"-+-", "+-+", "-+-", "+-+", "-+-"};
  std::vector<std::string> bp, bm;
  for (int k = 1; k <= 19; ++k) (k % 2 ? bp : bm).push_back("b" + std::to_string(k));
  e.sequences["ib+"] = slice_of(e, bp);
  e.sequences["ib-"] = slice_of(e, bm);
  for (int q = 1; q <= 5; ++q) {
    std::vector<std::string> wp;
    for (int w = 1; w <= 3; ++w)
      if (signs[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(w - 1)] == '+')
        wp.push_back("Q" + std::to_string(q) + "w" + std::to_string(w));
    e.sequences["iw+" + std::to_string(q)] = slice_of(e, wp);
  }
  e.sequences["h"] = e.parse("ib+|iw+1|ib-|iw+4");
  const int sigma[5] = {3, 1, 5, 2, 4};
  e.permutations["nu"] = perm_from_labels(e, [&](const std::string& l) {
    if (l[0] == 'b') return l;
    return "Q" + std::to_string(sigma[l[1] - '1']) + l.substr(2);
  });
  e.sequences["i"].slices = {};
  {
    const Permutation nu = e.permutations["nu"];
    Permutation p = identity_permutation(e.n());
    const SlicedSequence h = e.sequences["h"];
    for (int m = 0; m < 5; ++m) {
      for (const auto& s : h.slices) {
        std::vector<int> t;
        for (int k : s) t.push_back(p[static_cast<std::size_t>(k)]);
        e.sequences["i"].slices.push_back(t);
      }
      p = compose(nu, p);
    }
  }
  e.period = "h";
  e.ty_slice = "(ib+,iw+1)|(ib-,iw+4)";
  e.ty_permutation = "nu";
  e.period_permutation = "nu";
  e.seed_period = false;
  e.claims = {{"h", "nu", "matrix", true, true, "ib+|iw+1|ib-|iw+4 is a nu-period of Q"},
              {"i", "id", "matrix", true, true, "i = j(h, nu) is a period of Q"}};
  e.metadata = {{"level", 4}, {"copies", 5}};
  return e;
}

}  // namespace catalog_detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      catalog_detail::a2(),        catalog_detail::a3(),        catalog_detail::a4(),
      catalog_detail::del_pezzo3(), catalog_detail::a4_level4(), catalog_detail::b4_level4(),
      catalog_detail::sine_gordon(), catalog_detail::tamely_laced()};
  return entries;
}

inline const CatalogEntry& get_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw InvalidArgument("unknown catalog entry '" + name + "'");
}

}  // namespace periodica
