#pragma once

#include <httplib.h>

#include <string>

#include "periodica/service.hpp"

namespace periodica::http {

using service::Json;

inline void reply(httplib::Response& res, const service::Result& r) {
  res.status = 200;
  res.set_content(r.render(), r.text.empty() ? "application/json" : "text/plain");
}

inline Json body_of(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  Json j = Json::parse(req.body);
  if (!j.is_object()) throw InvalidArgument("request body must be a JSON object");
  return j;
}

template <typename F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    auto fail = [&](int status, const std::string& msg) {
      res.status = status;
      res.set_content(Json{{"error", msg}}.dump(2) + "\n", "application/json");
    };
    try {
      f(req, res);
    } catch (const service::NotFound& e) {
      fail(404, e.what());
    } catch (const Json::exception& e) {
      fail(400, std::string("malformed request: ") + e.what());
    } catch (const Error& e) {
      fail(400, e.what());
    } catch (const std::exception& e) {
      fail(500, e.what());
    }
  };
}

/// Registers every route on `server`; `store` must outlive it.
inline void install_routes(httplib::Server& server, service::SessionStore& store) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/catalog", guarded([](const httplib::Request&, httplib::Response& res) { reply(res, service::catalog_list()); }));
  server.Get(R"(/catalog/([^/]+))", guarded([](const httplib::Request& req, httplib::Response& res) {
               const auto format = req.has_param("format") ? req.get_param_value("format") : "json";
               reply(res, service::catalog_show(req.matches[1], format));
             }));

  // stateless commands, the same requests the command line builds
  const std::pair<const char*, service::Result (*)(const Json&)> commands[] = {
      {"/mutate", service::mutate},         {"/check-period", service::check_period}, {"/find-period", service::find_period},
      {"/ty", service::ty_system},          {"/dilog", service::dilog},
  };
  for (const auto& [path, fn] : commands)
    server.Post(path, guarded([fn = fn](const httplib::Request& req, httplib::Response& res) { reply(res, fn(body_of(req))); }));

  server.Post("/sessions", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                res.status = 200;
                res.set_content(store.create(body_of(req)).dump(2) + "\n", "application/json");
              }));
  server.Get(R"(/sessions/([^/]+))", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               res.set_content(store.get(req.matches[1]).dump(2) + "\n", "application/json");
             }));
  server.Post(R"(/sessions/([^/]+)/mutate)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                res.set_content(store.mutate(req.matches[1], body_of(req)).dump(2) + "\n", "application/json");
              }));
  server.Post(R"(/sessions/([^/]+)/undo)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                res.set_content(store.undo(req.matches[1]).dump(2) + "\n", "application/json");
              }));
  server.Post(R"(/sessions/([^/]+)/check-period)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                reply(res, service::check_period(store.as_request(req.matches[1], body_of(req))));
              }));
  server.Post(R"(/sessions/([^/]+)/ty)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                reply(res, service::ty_system(store.as_request(req.matches[1], body_of(req))));
              }));
  server.Post(R"(/sessions/([^/]+)/dilog)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                reply(res, service::dilog(store.as_request(req.matches[1], body_of(req))));
              }));
}

}  // namespace periodica::http
