// HTTP/JSON facade over the engine.
//
//   POST /api/solve             {game, tb}                 -> outcome record
//   POST /api/construct         {tb, a, b}                 -> {game, word}
//   GET  /api/lattice/{tb}                                 -> lattice record
//   POST /api/session           {game, tb, left_budget, marker, human_side}
//   POST /api/session/{id}/bid  {amount, include_marker}
//   POST /api/session/{id}/move {index}
//   GET  /api/session/{id}
//
// Session endpoints answer with the session snapshot. Failures answer with
// {error, message}.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "richman/play.hpp"
#include "richman/records.hpp"
#include "richman/solver.hpp"

namespace richman {

struct ServiceLimits {
  Dollars max_total = 64;
  Dollars max_lattice_total = 200;
  std::size_t max_game_text = 4096;
};

struct Response {
  int status = 200;
  json body;
};

class Service {
 public:
  explicit Service(ServiceLimits limits = {},
                   std::chrono::seconds session_ttl = std::chrono::minutes(30));

  /// Never throws; every failure becomes an error response.
  Response handle(std::string_view method, std::string_view path, std::string_view body);

  SessionStore& sessions() noexcept { return sessions_; }

 private:
  Response route(std::string_view method, std::string_view path, const json& body);
  Response solve(const json& body);
  Response construct(const json& body);
  Response lattice(std::string_view tb);
  Response create_session(const json& body);

  std::shared_ptr<Solver> solver_for(Dollars total);

  ServiceLimits limits_;
  SessionStore sessions_;
  std::mutex solvers_mutex_;
  std::map<Dollars, std::shared_ptr<Solver>> solvers_;
};

/// Binds a Service to a socket. Requests run on the server's thread pool.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// bind + listen; returns false when the socket cannot be bound.
bool serve(Service& service, const std::string& host, int port);

}  // namespace richman
