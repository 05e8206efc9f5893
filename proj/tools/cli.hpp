#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "http_server.hpp"
#include "periodica/service.hpp"

namespace periodica::cli {

using service::Json;

inline Json read_json_file(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

// --nu accepts a JSON file, an inline JSON array, or a permutation name.
inline Json nu_value(const std::string& v) {
  if (!v.empty() && v.front() == '[') return Json::parse(v);
  if (std::filesystem::exists(v)) return read_json_file(v);
  return Json(v);
}

struct Source {
  std::string catalog, seed, sequence, nu;
};

inline void add_source(CLI::App* app, Source& s, bool with_nu = true) {
  app->add_option("--catalog", s.catalog, "built-in catalog entry");
  app->add_option("--seed", s.seed, "seed or quiver JSON file ('-' for stdin)");
  app->add_option("--sequence", s.sequence, "mutation sequence, e.g. \"(1,2)^5\" or \"(1,3)|(2)\"");
  if (with_nu) app->add_option("--nu", s.nu, "permutation: JSON file, inline [..] array or catalog name");
}

inline Json request_of(const Source& s) {
  Json req = Json::object();
  if (!s.catalog.empty()) req["catalog"] = s.catalog;
  if (!s.seed.empty()) req["seed"] = read_json_file(s.seed);
  if (!s.sequence.empty()) req["sequence"] = s.sequence;
  if (!s.nu.empty()) req["nu"] = nu_value(s.nu);
  return req;
}

/// Runs one command line; returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cluster-algebra mutation, periodicity, T/Y-systems and dilogarithm identities"};
  app.require_subcommand(1);
  std::size_t max_terms = 0;
  app.add_option("--max-terms", max_terms, "term cap per polynomial (default 1000000)");

  Source src;
  bool no_f = false;
  auto* mutate = app.add_subcommand("mutate", "mutate the principal seed along a sequence");
  add_source(mutate, src, false);
  mutate->add_flag("--no-f", no_f, "skip F-polynomial tracking");

  std::string method = "tropical", level = "seed";
  bool enumerate = false;
  auto* check = app.add_subcommand("check-period", "decide whether a sequence is a (nu-)period");
  add_source(check, src);
  check->add_option("--method", method, "tropical|symbolic")->check(CLI::IsMember({"tropical", "symbolic"}));
  check->add_option("--level", level, "seed|matrix")->check(CLI::IsMember({"seed", "matrix"}));
  check->add_flag("--enumerate-nu", enumerate, "try every permutation matching the final matrix");

  std::size_t max_length = 12, max_results = 1;
  unsigned threads = 0;
  auto* find = app.add_subcommand("find-period", "search for short seed periods");
  find->add_option("--catalog", src.catalog, "built-in catalog entry");
  find->add_option("--seed", src.seed, "seed or quiver JSON file");
  find->add_option("--max-length", max_length, "longest sequence to consider");
  find->add_option("--max-results", max_results, "number of periods to report");
  find->add_option("--threads", threads, "worker threads (results do not depend on it)");

  std::string format = "json";
  bool balanced = false, no_coeff = false;
  auto* gy = app.add_subcommand("gen-ysystem", "Y-system of a sliced nu-period");
  auto* gt = app.add_subcommand("gen-tsystem", "T-system of a sliced nu-period");
  for (auto* sub : {gy, gt}) {
    add_source(sub, src);
    sub->add_option("--format", format, "json|latex")->check(CLI::IsMember({"json", "latex"}));
    sub->add_flag("--balanced", balanced, "LaTeX with half-shifted times (regular periods only)");
  }
  gt->add_flag("--no-coefficients", no_coeff, "coefficient-free T-system");

  int trials = 5;
  double tolerance = 1e-9;
  std::uint64_t rng_seed = DilogOptions{}.seed;
  bool weighted = false;
  auto* dl = app.add_subcommand("verify-dilog", "check the dilogarithm identities of a seed period");
  add_source(dl, src);
  dl->add_option("--trials", trials, "number of random initial draws")->check(CLI::PositiveNumber);
  dl->add_option("--tolerance", tolerance, "allowed residual");
  dl->add_option("--rng-seed", rng_seed, "seed of the initial-value generator");
  dl->add_flag("--weighted", weighted, "weight sites by lcm(d)/d_i");

  std::string cat_action, cat_name;
  auto* cat = app.add_subcommand("catalog", "list or show built-in examples");
  cat->add_option("action", cat_action, "list|show")->required()->check(CLI::IsMember({"list", "show"}));
  cat->add_option("name", cat_name, "entry name for show");
  cat->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));

  std::string host = "127.0.0.1", data_dir;
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "run the HTTP/JSON service");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "port");
  serve->add_option("--data", data_dir, "session directory (default $PERIODICA_DATA)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (max_terms > 0) term_cap() = max_terms;
    service::Result r;
    if (mutate->parsed()) {
      Json req = request_of(src);
      if (no_f) req["track_f"] = false;
      r = service::mutate(req);
    } else if (check->parsed()) {
      Json req = request_of(src);
      req["method"] = method;
      req["level"] = level;
      if (enumerate) req["enumerate_nu"] = true;
      r = service::check_period(req);
    } else if (find->parsed()) {
      Json req = request_of(src);
      req["max_length"] = max_length;
      req["max_results"] = max_results;
      if (threads > 0) req["threads"] = threads;
      r = service::find_period(req);
    } else if (gy->parsed() || gt->parsed()) {
      Json req = request_of(src);
      req["kind"] = gy->parsed() ? "Y" : "T";
      req["format"] = format;
      if (balanced) req["balanced"] = true;
      if (no_coeff) req["with_coefficients"] = false;
      r = service::ty_system(req);
    } else if (dl->parsed()) {
      Json req = request_of(src);
      req["trials"] = trials;
      req["tolerance"] = tolerance;
      req["rng_seed"] = rng_seed;
      if (weighted) req["weighted"] = true;
      r = service::dilog(req);
    } else if (cat->parsed()) {
      if (cat_action == "list") {
        r = service::catalog_list();
      } else {
        if (cat_name.empty()) throw InvalidArgument("catalog show needs an entry name");
        r = service::catalog_show(cat_name, format);
      }
    } else if (serve->parsed()) {
      service::SessionStore store(data_dir.empty() ? service::SessionStore::default_dir() : std::filesystem::path(data_dir));
      httplib::Server server;
      http::install_routes(server, store);
      err << "listening on " << host << ":" << port << ", sessions in " << store.dir().string() << "\n";
      if (!server.listen(host, port)) throw Error("cannot bind " + host + ":" + std::to_string(port));
      return 0;
    }
    out << r.render();
    return r.exit_code;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace periodica::cli
