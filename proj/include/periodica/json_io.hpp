#pragma once

// JSON encoding of library objects. Every vertex index is 1-based here.
// Keys keep insertion order so output is stable byte for byte.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "periodica/catalog.hpp"
#include "periodica/dilog.hpp"
#include "periodica/periodicity.hpp"
#include "periodica/principal_seed.hpp"
#include "periodica/sfrational.hpp"
#include "periodica/tropical.hpp"
#include "periodica/ty_system.hpp"

namespace periodica::io {

using Json = nlohmann::ordered_json;

/// Machine integers stay numbers; anything wider becomes a decimal string.
inline Json big(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

inline mpz_class big_from(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("malformed integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

inline Json matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(big(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
  const std::size_t n = j.size();
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw InvalidArgument("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = big_from(j[r][c]);
  }
  return m;
}

inline Json monomial(const Monomial& m) {
  Json out = Json::array();
  for (const auto& [v, e] : m.entries()) out.push_back(Json{{"var", v + 1}, {"exp", e}});
  return out;
}

inline Monomial monomial_from(const Json& j) {
  std::vector<Monomial::Entry> pairs;
  for (const auto& t : j) {
    const int var = t.at("var").get<int>();
    if (var < 1) throw InvalidArgument("variable indices are 1-based");
    pairs.emplace_back(var - 1, t.at("exp").get<int>());
  }
  return Monomial::from_pairs(std::move(pairs));
}

/// [[monomial, coeff], ...] in lexicographic monomial order.
inline Json polynomial(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(Json::array({monomial(m), big(c)}));
  return out;
}

inline Polynomial polynomial_from(const Json& j) {
  Polynomial p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw InvalidArgument("polynomial terms are [monomial, coeff] pairs");
    p.add_term(monomial_from(t[0]), big_from(t[1]));
  }
  return p;
}

inline Json sfrational(const SFRational& r) { return Json{{"num", polynomial(r.num())}, {"den", polynomial(r.den())}}; }

inline SFRational sfrational_from(const Json& j) { return SFRational(polynomial_from(j.at("num")), polynomial_from(j.at("den"))); }

/// A tropical monomial in the same shape: the positive part over the
/// negative part.
inline Json tropical(const TropMonomial& t) {
  Monomial up, down;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const int e = to_int(t[i]);
    if (e > 0) up = up * Monomial::variable(static_cast<int>(i), e);
    if (e < 0) down = down * Monomial::variable(static_cast<int>(i), -e);
  }
  return Json{{"num", polynomial(Polynomial(up))}, {"den", polynomial(Polynomial(down))}};
}

inline Json sequence(const std::vector<int>& seq) {
  Json out = Json::array();
  for (int k : seq) out.push_back(k + 1);
  return out;
}

inline Json slices(const SlicedSequence& s) {
  Json out = Json::array();
  for (const auto& sl : s.slices) out.push_back(sequence(sl));
  return out;
}

inline Json permutation(const Permutation& p, std::size_t n) { return sequence(p.empty() ? identity_permutation(n) : p); }

inline Permutation permutation_from(const Json& j, std::size_t n) {
  if (!j.is_array()) throw InvalidArgument("permutation must be an array of 1-based images");
  Permutation p;
  for (const auto& v : j) p.push_back(v.get<int>() - 1);
  validate_permutation(p, n);
  return p;
}

inline Json quiver(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [p, m] : q.arrows()) arrows.push_back(Json::array({p.first + 1, p.second + 1, big(m)}));
  return Json{{"vertices", q.n()}, {"arrows", arrows}};
}

inline Quiver quiver_from(const Json& j) {
  const int n = j.at("vertices").get<int>();
  if (n < 1) throw InvalidArgument("a quiver needs at least one vertex");
  std::vector<std::tuple<int, int, long long>> list;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() < 2 || a.size() > 3) throw InvalidArgument("arrows are [tail, head, mult]");
    list.emplace_back(a[0].get<int>() - 1, a[1].get<int>() - 1, a.size() == 3 ? a[2].get<long long>() : 1);
  }
  return Quiver::from_list(n, list);
}

/// {"n","B","C","G","F","history"}; F is null when not tracked.
inline Json seed(const PrincipalSeed& s) {
  Json f = nullptr;
  if (s.tracks_f()) {
    f = Json::array();
    for (const auto& p : s.f()) f.push_back(polynomial(p));
  }
  return Json{{"n", s.n()}, {"B", matrix(s.b().matrix())}, {"C", matrix(s.c())}, {"G", matrix(s.g())},
              {"F", f},     {"history", sequence(s.history())}};
}

/// Initial exchange matrix of a seed or quiver document. A seed with a
/// history is unwound back to its initial matrix (mutation is an involution).
inline ExchangeMatrix initial_matrix_from(const Json& j) {
  if (j.contains("vertices")) return quiver_from(j).to_matrix();
  if (!j.contains("B")) throw InvalidArgument("seed document needs \"B\" or \"vertices\"");
  ExchangeMatrix b(matrix_from(j.at("B")));
  if (j.contains("history")) {
    const auto& h = j.at("history");
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
      const int k = it->get<int>() - 1;
      if (k < 0) throw InvalidArgument("history indices are 1-based");
      b = b.mutate(static_cast<std::size_t>(k));
    }
  }
  return b;
}

inline Json tropical_signs(const PrincipalSeed& s) {
  Json out = Json::array();
  for (std::size_t k = 0; k < s.n(); ++k) out.push_back(s.c_vector(k).sign());
  return out;
}

inline Json verdict(const PeriodVerdict& v, const std::vector<int>& seq, const Permutation& nu, std::size_t n) {
  Json out{{"sequence", sequence(seq)},
           {"nu", permutation(nu, n)},
           {"method", v.method},
           {"matrix_periodic", v.matrix_periodic},
           {"seed_periodic", v.seed_periodic ? Json(*v.seed_periodic) : Json(nullptr)},
           {"conjectural", v.conjectural}};
  if (v.witness) {
    out["witness"] = Json::array({v.witness->first + 1, v.witness->second + 1});
    out["witness_kind"] = v.witness_kind;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

inline Json site(const Site& s) { return Json::array({s.first + 1, s.second}); }

inline Json relation(const TYRelation& r) {
  Json plus = Json::array(), minus = Json::array(), external = Json::array();
  for (const auto& [s, e] : r.plus) plus.push_back(Json::array({s.first + 1, s.second, e}));
  for (const auto& [s, e] : r.minus) minus.push_back(Json::array({s.first + 1, s.second, e}));
  for (const auto& [j, e] : r.external) external.push_back(Json::array({j + 1, e}));
  Json out{{"site", site(r.site)}, {"partner", site(r.partner)}, {"plus", plus}, {"minus", minus}};
  if (r.kind == TYKind::T) {
    out["external"] = external;
    out["with_coefficients"] = r.with_coefficients;
  }
  return out;
}

/// Relations sorted by (u, i) with the schedule data needed to read them.
inline Json relations(const SliceSchedule& s, const std::vector<TYRelation>& rels, TYKind kind) {
  std::vector<const TYRelation*> sorted;
  for (const auto& r : rels) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const TYRelation* a, const TYRelation* b) {
    return std::pair{a->site.second, a->site.first} < std::pair{b->site.second, b->site.first};
  });
  Json list = Json::array();
  for (const auto* r : sorted) list.push_back(relation(*r));
  Json in_j = Json::array();
  for (std::size_t i = 0; i < s.n(); ++i)
    if (s.in_j(static_cast<int>(i))) in_j.push_back(i + 1);
  return Json{{"kind", kind == TYKind::Y ? "Y" : "T"},
              {"slices", slices(s.slices())},
              {"nu", permutation(s.nu(), s.n())},
              {"t", s.t()},
              {"window", s.window()},
              {"regular", s.regular()},
              {"J", in_j},
              {"relations", list}};
}

inline Json dilog_report(const DilogReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.trials)
    trials.push_back(Json{{"initial", t.initial},
                          {"sum_minus", t.sum_minus},
                          {"sum_plus", t.sum_plus},
                          {"residual_minus", t.residual_minus},
                          {"residual_plus", t.residual_plus},
                          {"euler_residual", t.euler_residual},
                          {"period_residual", t.period_residual},
                          {"relation_residual", t.relation_residual},
                          {"rescaled", t.rescaled}});
  return Json{{"N_plus", r.n_plus},         {"N_minus", r.n_minus}, {"sites", r.sites},
              {"weighted", r.weighted},     {"conditional", r.conditional},
              {"tolerance", r.tolerance},   {"max_residual", r.max_residual},
              {"spread", r.spread},         {"ok", r.ok},
              {"trials", trials}};
}

inline Json catalog_summary(const CatalogEntry& e) {
  return Json{{"name", e.name}, {"description", e.description}, {"vertices", e.n()}, {"period", e.period}, {"seed_period", e.seed_period}};
}

inline Json catalog_entry(const CatalogEntry& e) {
  Json perms = Json::object(), seqs = Json::object(), claims = Json::array(), meta = Json::object();
  for (const auto& [k, p] : e.permutations) perms[k] = permutation(p, e.n());
  for (const auto& [k, s] : e.sequences) seqs[k] = slices(s);
  for (const auto& c : e.claims)
    claims.push_back(Json{{"sequence", c.sequence},
                          {"permutation", c.permutation},
                          {"level", c.level},
                          {"expected", c.expected},
                          {"asserted", c.asserted},
                          {"note", c.note}});
  for (const auto& [k, v] : e.metadata) meta[k] = v;
  Json out{{"name", e.name}, {"description", e.description}, {"labels", e.labels}};
  out["B"] = matrix(e.b.matrix());
  if (e.b.is_skew_symmetric()) out["quiver"] = quiver(Quiver::from_matrix(e.b));
  out["permutations"] = perms;
  out["sequences"] = seqs;
  out["period"] = e.period;
  out["period_permutation"] = e.period_permutation;
  out["seed_period"] = e.seed_period;
  out["ty_slice"] = e.ty_slice;
  out["ty_permutation"] = e.ty_permutation;
  out["claims"] = claims;
  out["metadata"] = meta;
  out["figure_transcribed"] = e.figure_transcribed;
  return out;
}

/// Graphviz rendering; arrow labels show multiplicities above one.
inline std::string dot(const ExchangeMatrix& b, const std::vector<std::string>& labels, const std::string& name) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph " + quote(name) + " {\n";
  for (std::size_t i = 0; i < b.n(); ++i)
    out += "  " + std::to_string(i + 1) + " [label=" + quote(i < labels.size() ? labels[i] : std::to_string(i + 1)) + "];\n";
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j) {
      if (b(i, j) <= 0) continue;
      out += "  " + std::to_string(i + 1) + " -> " + std::to_string(j + 1);
      if (!b.is_skew_symmetric())
        out += " [label=" + quote(b(i, j).get_str() + "," + mpz_class(-b(j, i)).get_str()) + "]";
      else if (b(i, j) > 1)
        out += " [label=" + quote(b(i, j).get_str()) + "]";
      out += ";\n";
    }
  return out + "}\n";
}

}  // namespace periodica::io
