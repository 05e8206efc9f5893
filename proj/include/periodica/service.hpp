#pragma once

// Request/response core shared by the command line and the HTTP server.
// Both front ends build the same JSON request and print the same body.

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "periodica/catalog.hpp"
#include "periodica/dilog.hpp"
#include "periodica/json_io.hpp"
#include "periodica/periodicity.hpp"
#include "periodica/principal_seed.hpp"
#include "periodica/ty_system.hpp"

namespace periodica::service {

using io::Json;

struct Result {
  Json body;
  std::string text;  // set for latex and dot output, replaces the JSON body
  int exit_code = 0;

  std::string render() const { return text.empty() ? body.dump(2) + "\n" : text; }
};

/// Lookup failures that HTTP reports as 404.
class NotFound : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline const CatalogEntry* entry_of(const Json& req) {
  if (!req.contains("catalog")) return nullptr;
  const auto name = req.at("catalog").get<std::string>();
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  throw NotFound("unknown catalog entry '" + name + "'");
}

inline ExchangeMatrix matrix_of(const Json& req, const CatalogEntry* e) {
  if (req.contains("seed")) return io::initial_matrix_from(req.at("seed"));
  if (req.contains("B")) return ExchangeMatrix(io::matrix_from(req.at("B")));
  if (e) return e->b;
  throw InvalidArgument("request needs one of \"catalog\", \"seed\" or \"B\"");
}

inline std::optional<SlicedSequence> slices_of(const Json& req, const CatalogEntry* e) {
  if (!req.contains("sequence")) return std::nullopt;
  const auto& s = req.at("sequence");
  if (s.is_string()) return e ? e->parse(s.get<std::string>()) : parse_sequence(s.get<std::string>());
  if (s.is_array()) {
    std::vector<int> flat;
    for (const auto& k : s) {
      if (!k.is_number_integer() || k.get<int>() < 1) throw InvalidArgument("sequence entries are 1-based indices");
      flat.push_back(k.get<int>() - 1);
    }
    return SlicedSequence::singletons(flat);
  }
  throw InvalidArgument("sequence must be a string or an array");
}

inline Permutation nu_of(const Json& req, const CatalogEntry* e, std::size_t n) {
  if (!req.contains("nu") || req.at("nu").is_null()) return {};
  const auto& v = req.at("nu");
  if (v.is_array()) return io::permutation_from(v, n);
  const auto expr = v.get<std::string>();
  if (e) return e->permutation(expr);
  if (expr == "id") return {};
  throw InvalidArgument("named permutations need a catalog entry");
}

// Sequence and nu, falling back to the catalog defaults named by the two
// member pointers.
inline std::pair<SlicedSequence, Permutation> spec_of(const Json& req, const CatalogEntry* e, std::size_t n,
                                                      std::string CatalogEntry::*seq_field,
                                                      std::string CatalogEntry::*perm_field) {
  auto seq = slices_of(req, e);
  if (seq) {
    for (int k : seq->flatten())
      if (k < 0 || static_cast<std::size_t>(k) >= n)
        throw InvalidArgument("index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
    return {*seq, nu_of(req, e, n)};
  }
  if (!e) throw InvalidArgument("request needs a \"sequence\"");
  Permutation nu = req.contains("nu") ? nu_of(req, e, n) : e->permutation(e->*perm_field);
  return {e->parse(e->*seq_field), nu};
}

template <typename T>
T get_or(const Json& req, const char* key, T fallback) {
  return req.contains(key) && !req.at(key).is_null() ? req.at(key).get<T>() : fallback;
}

}  // namespace detail

/// Applies a mutation sequence to the principal seed.
inline Result mutate(const Json& req) {
  const auto* e = detail::entry_of(req);
  const auto b = detail::matrix_of(req, e);
  const auto seq = detail::slices_of(req, e).value_or(SlicedSequence{}).flatten();
  const bool track_f = detail::get_or(req, "track_f", true);
  PrincipalSeed s(b, track_f ? FTracking::Full : FTracking::Off);
  for (int k : seq) s.mutate_in_place(static_cast<std::size_t>(k));
  Json body = io::seed(s);
  body["signs"] = io::tropical_signs(s);
  return {body, {}, 0};
}

/// Period check. Exit code 0 when periodic at the requested level.
inline Result check_period(const Json& req) {
  const auto* e = detail::entry_of(req);
  const auto b = detail::matrix_of(req, e);
  const auto [slices, nu] = detail::spec_of(req, e, b.n(), &CatalogEntry::period, &CatalogEntry::period_permutation);
  const auto method = detail::get_or<std::string>(req, "method", "tropical");
  const auto level = detail::get_or<std::string>(req, "level", "seed");
  if (method != "tropical" && method != "symbolic") throw InvalidArgument("method must be tropical or symbolic");
  if (level != "seed" && level != "matrix") throw InvalidArgument("level must be seed or matrix");
  const auto seq = slices.flatten();
  auto verdict_for = [&](const Permutation& p) {
    const NuPeriodSpec spec{seq, p};
    if (level == "matrix") {
      PeriodVerdict v;
      v.method = "matrix";
      v.matrix_periodic = check_matrix_period(b, spec);
      const auto after = apply_matrix(b, seq);
      v.witness = matrix_period_witness(b, after, spec.nu_or_identity(b.n()));
      if (v.witness) v.witness_kind = "matrix";
      return v;
    }
    return method == "symbolic" ? check_seed_period_symbolic(b, spec) : check_seed_period_tropical(b, spec);
  };
  auto periodic = [&](const PeriodVerdict& v) { return level == "matrix" ? v.matrix_periodic : v.seed_periodic.value_or(false); };

  if (detail::get_or(req, "enumerate_nu", false)) {
    Json candidates = Json::array(), verdicts = Json::array();
    bool any = false;
    for (const auto& p : enumerate_nu(b, seq)) {
      const auto v = verdict_for(p);
      any = any || periodic(v);
      candidates.push_back(io::permutation(p, b.n()));
      verdicts.push_back(io::verdict(v, seq, p, b.n()));
    }
    Json body{{"sequence", io::sequence(seq)}, {"level", level}, {"candidates", candidates}, {"verdicts", verdicts}};
    return {body, {}, any ? 0 : 1};
  }
  const auto v = verdict_for(nu);
  Json body = io::verdict(v, seq, nu, b.n());
  body["level"] = level;
  body["periodic"] = periodic(v);
  return {body, {}, periodic(v) ? 0 : 1};
}

inline Result find_period(const Json& req) {
  const auto* e = detail::entry_of(req);
  const auto b = detail::matrix_of(req, e);
  const auto max_length = detail::get_or<std::size_t>(req, "max_length", 12);
  const auto max_results = detail::get_or<std::size_t>(req, "max_results", 1);
  const auto threads = detail::get_or<unsigned>(req, "threads", std::max(1U, std::thread::hardware_concurrency()));
  Json periods = Json::array();
  for (const auto& f : periodica::find_period(b, max_length, max_results, threads))
    periods.push_back(Json{{"sequence", io::sequence(f.seq)}, {"length", f.seq.size()}, {"nu", io::permutation(f.nu, b.n())}});
  return {Json{{"max_length", max_length}, {"periods", periods}}, {}, periods.empty() ? 1 : 0};
}

/// T- or Y-system of a slice ("kind": "T" or "Y").
inline Result ty_system(const Json& req) {
  const auto* e = detail::entry_of(req);
  const auto b = detail::matrix_of(req, e);
  const auto [slices, nu] = detail::spec_of(req, e, b.n(), &CatalogEntry::ty_slice, &CatalogEntry::ty_permutation);
  const auto kind_name = detail::get_or<std::string>(req, "kind", "Y");
  if (kind_name != "T" && kind_name != "Y") throw InvalidArgument("kind must be T or Y");
  const TYKind kind = kind_name == "T" ? TYKind::T : TYKind::Y;
  const SliceSchedule s(b, slices, nu);
  const auto rels = kind == TYKind::Y ? gen_y_system(s) : gen_t_system(s, detail::get_or(req, "with_coefficients", true));
  const auto format = detail::get_or<std::string>(req, "format", "json");
  if (format == "latex")
    return {Json(), to_latex(s, rels, e ? e->labels : std::vector<std::string>{}, detail::get_or(req, "balanced", false)), 0};
  if (format != "json") throw InvalidArgument("format must be json or latex");
  return {io::relations(s, rels, kind), {}, 0};
}

/// Dilogarithm identities along a seed period. Exit code 1 on violation.
inline Result dilog(const Json& req) {
  const auto* e = detail::entry_of(req);
  const auto b = detail::matrix_of(req, e);
  const auto [slices, nu] = detail::spec_of(req, e, b.n(), &CatalogEntry::period, &CatalogEntry::period_permutation);
  DilogOptions opt;
  opt.trials = detail::get_or(req, "trials", opt.trials);
  opt.tolerance = detail::get_or(req, "tolerance", opt.tolerance);
  opt.seed = detail::get_or<std::uint64_t>(req, "rng_seed", opt.seed);
  opt.weighted = detail::get_or(req, "weighted", !b.is_skew_symmetric());
  const SliceSchedule s(b, slices, nu);
  const auto rep = verify_identity(s, opt);
  Json body = io::dilog_report(rep);
  body["sequence"] = io::slices(slices);
  body["rng_seed"] = opt.seed;
  return {body, {}, rep.ok ? 0 : 1};
}

inline Result catalog_list() {
  Json list = Json::array();
  for (const auto& e : catalog()) list.push_back(io::catalog_summary(e));
  return {list, {}, 0};
}

inline Result catalog_show(const std::string& name, const std::string& format = "json") {
  const auto* e = detail::entry_of(Json{{"catalog", name}});
  if (format == "dot") return {Json(), io::dot(e->b, e->labels, e->name), 0};
  if (format != "json") throw InvalidArgument("format must be json or dot");
  return {io::catalog_entry(*e), {}, 0};
}

/// Interactive mutation sessions persisted as one JSON file each.
class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

  static std::filesystem::path default_dir() {
    if (const char* d = std::getenv("PERIODICA_DATA"); d && *d) return d;
    return std::filesystem::temp_directory_path() / "periodica-sessions";
  }

  const std::filesystem::path& dir() const { return dir_; }

  /// Body: {"catalog": name} or {"seed": doc} or {"B": rows}; optional "track_f".
  Json create(const Json& req) {
    const auto* e = detail::entry_of(req);
    const auto b = detail::matrix_of(req, e);
    std::lock_guard lock(mu_);
    long next = 1;
    for (const auto& f : std::filesystem::directory_iterator(dir_)) {
      const auto stem = f.path().stem().string();
      if (f.path().extension() == ".json" && stem.size() > 1 && stem[0] == 's')
        next = std::max(next, std::stol(stem.substr(1)) + 1);
    }
    Json doc{{"id", "s" + std::to_string(next)},
             {"catalog", e ? Json(e->name) : Json(nullptr)},
             {"B", io::matrix(b.matrix())},
             {"track_f", detail::get_or(req, "track_f", true)},
             {"history", Json::array()}};
    save(doc, replay(doc));
    return view(doc, replay(doc));
  }

  Json get(const std::string& id) {
    std::lock_guard lock(mu_);
    const auto doc = load(id);
    return view(doc, replay(doc));
  }

  Json mutate(const std::string& id, const Json& req) {
    std::lock_guard lock(mu_);
    auto doc = load(id);
    const int k = req.at("k").get<int>();
    PrincipalSeed s = replay(doc);
    if (k < 1 || static_cast<std::size_t>(k) > s.n()) throw InvalidArgument("vertex " + std::to_string(k) + " out of range");
    s.mutate_in_place(static_cast<std::size_t>(k - 1));
    doc["history"].push_back(k);
    save(doc, s);
    Json out = view(doc, s);
    const auto kk = static_cast<std::size_t>(k - 1);
    Json c = Json::array(), g = Json::array();
    for (const auto& v : s.c().column(kk)) c.push_back(io::big(v));
    for (const auto& v : s.g().column(kk)) g.push_back(io::big(v));
    out["delta"] = Json{{"k", k}, {"c", c}, {"g", g}, {"F", s.tracks_f() ? io::polynomial(s.f()[kk]) : Json(nullptr)}};
    return out;
  }

  Json undo(const std::string& id) {
    std::lock_guard lock(mu_);
    auto doc = load(id);
    if (doc["history"].empty()) throw InvalidArgument("nothing to undo");
    doc["history"].erase(doc["history"].size() - 1);
    const auto s = replay(doc);
    save(doc, s);
    return view(doc, s);
  }

  /// The request as a stateless command would see it: the session's
  /// initial matrix and, unless given, its history as the sequence.
  Json as_request(const std::string& id, const Json& req) {
    std::lock_guard lock(mu_);
    const auto doc = load(id);
    Json out = req;
    out.erase("seed");
    if (doc["catalog"].is_string()) {
      out["catalog"] = doc["catalog"];
      out.erase("B");
    } else {
      out.erase("catalog");
      out["B"] = doc["B"];
    }
    if (!out.contains("sequence")) out["sequence"] = doc["history"];
    return out;
  }

 private:
  std::filesystem::path path(const std::string& id) const {
    if (id.empty() || id[0] != 's' || id.find_first_not_of("0123456789", 1) != std::string::npos)
      throw NotFound("unknown session '" + id + "'");
    return dir_ / (id + ".json");
  }

  Json load(const std::string& id) const {
    std::ifstream in(path(id));
    if (!in) throw NotFound("unknown session '" + id + "'");
    Json doc = Json::parse(in);
    // replaying the history must reproduce the stored state
    if (doc.contains("seed") && io::seed(replay(doc)) != doc["seed"]) throw IntegrityError("session " + id + " fails replay");
    return doc;
  }

  void save(Json doc, const PrincipalSeed& s) const {
    doc["seed"] = io::seed(s);
    const auto p = path(doc["id"].get<std::string>());
    const auto tmp = p.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << doc.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, p);
  }

  static PrincipalSeed replay(const Json& doc) {
    PrincipalSeed s(ExchangeMatrix(io::matrix_from(doc.at("B"))), doc.value("track_f", true) ? FTracking::Full : FTracking::Off);
    for (const auto& k : doc.at("history")) s.mutate_in_place(static_cast<std::size_t>(k.get<int>() - 1));
    return s;
  }

  static Json view(const Json& doc, const PrincipalSeed& s) {
    Json out{{"id", doc["id"]}, {"catalog", doc["catalog"]}};
    if (doc["catalog"].is_string()) out["labels"] = get_entry(doc["catalog"].get<std::string>()).labels;
    out["history"] = doc["history"];
    out["seed"] = io::seed(s);
    out["signs"] = io::tropical_signs(s);
    return out;
  }

  std::filesystem::path dir_;
  std::mutex mu_;
};

}  // namespace periodica::service
