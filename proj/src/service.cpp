#include "richman/service.hpp"

#include <charconv>

#include "httplib.h"

#include "richman/constructor.hpp"
#include "richman/lattice.hpp"
#include "richman/notation.hpp"

namespace richman {

namespace {

struct ApiError {
  int status;
  std::string code;
  std::string message;
};

Response error(int status, std::string code, std::string message) {
  return {status, {{"error", std::move(code)}, {"message", std::move(message)}}};
}

[[noreturn]] void bad_request(const std::string& message) {
  throw ApiError{400, "bad_request", message};
}

const json& field(const json& body, const char* name) {
  if (!body.is_object()) bad_request("request body must be a JSON object");
  auto it = body.find(name);
  if (it == body.end()) bad_request(std::string("missing field '") + name + "'");
  return *it;
}

Dollars int_field(const json& body, const char* name) {
  const json& v = field(body, name);
  if (!v.is_number_integer()) bad_request(std::string("'") + name + "' must be an integer");
  const auto n = v.get<std::int64_t>();
  if (n < 0 || n > 1'000'000) bad_request(std::string("'") + name + "' out of range");
  return static_cast<Dollars>(n);
}

std::string string_field(const json& body, const char* name) {
  const json& v = field(body, name);
  if (!v.is_string()) bad_request(std::string("'") + name + "' must be a string");
  return v.get<std::string>();
}

Player player_field(const json& body, const char* name) {
  const std::string s = string_field(body, name);
  if (s == "Left" || s == "L" || s == "left") return Player::Left;
  if (s == "Right" || s == "R" || s == "right") return Player::Right;
  bad_request(std::string("'") + name + "' must be \"Left\" or \"Right\"");
}

Dollars parse_total(std::string_view text) {
  Dollars tb = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), tb);
  if (ec != std::errc() || end != text.data() + text.size() || tb < 0)
    throw ApiError{400, "bad_request", "tb must be a non-negative integer"};
  return tb;
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    const auto slash = path.find('/');
    parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash);
  }
  return parts;
}

}  // namespace

Service::Service(ServiceLimits limits, std::chrono::seconds session_ttl)
    : limits_(limits), sessions_(session_ttl) {}

std::shared_ptr<Solver> Service::solver_for(Dollars total) {
  std::lock_guard lock(solvers_mutex_);
  auto& slot = solvers_[total];
  if (!slot) slot = std::make_shared<Solver>(total);
  return slot;
}

Response Service::handle(std::string_view method, std::string_view path,
                         std::string_view body) {
  try {
    json parsed;
    if (method == "POST") {
      parsed = json::parse(body.begin(), body.end(), nullptr, false);
      if (parsed.is_discarded()) return error(400, "bad_json", "request body is not valid JSON");
    }
    return route(method, path, parsed);
  } catch (const ApiError& e) {
    return error(e.status, e.code, e.message);
  } catch (const ParseError& e) {
    return error(400, "parse_error", e.what());
  } catch (const InvalidBudget& e) {
    return error(400, "invalid_budget", e.what());
  } catch (const IllegalBid& e) {
    return error(400, "illegal_bid", e.what());
  } catch (const InfeasibleShortForm& e) {
    return error(400, "infeasible_short_form", e.what());
  } catch (const BadMoveIndex& e) {
    return error(400, "bad_move_index", e.what());
  } catch (const UnknownSession& e) {
    return error(404, "unknown_session", e.what());
  } catch (const WrongPhase& e) {
    return error(409, "wrong_phase", e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, "bad_request", e.what());
  } catch (const std::out_of_range& e) {
    return error(400, "bad_request", e.what());
  } catch (const std::exception& e) {
    return error(500, "internal", e.what());
  }
}

Response Service::route(std::string_view method, std::string_view path, const json& body) {
  const auto parts = split_path(path);
  const auto n = parts.size();
  auto is = [&](std::initializer_list<std::string_view> want) {
    if (want.size() != n) return false;
    std::size_t i = 0;
    for (auto w : want) {
      if (!w.empty() && parts[i] != w) return false;
      ++i;
    }
    return true;
  };
  auto expect = [&](std::string_view m) {
    if (method != m)
      throw ApiError{405, "method_not_allowed",
                     std::string(method) + " not allowed on " + std::string(path)};
  };

  if (is({"api", "solve"})) return expect("POST"), solve(body);
  if (is({"api", "construct"})) return expect("POST"), construct(body);
  if (is({"api", "lattice", ""})) return expect("GET"), lattice(parts[2]);
  if (is({"api", "session"})) return expect("POST"), create_session(body);
  if (is({"api", "session", ""})) {
    expect("GET");
    json snap;
    sessions_.with(std::string(parts[2]), [&](PlaySession& s) { snap = s.snapshot(); });
    return {200, snap};
  }
  if (is({"api", "session", "", "bid"})) {
    expect("POST");
    Bid bid{int_field(body, "amount"), false};
    if (body.contains("include_marker")) {
      if (!body["include_marker"].is_boolean())
        bad_request("'include_marker' must be a boolean");
      bid.include_marker = body["include_marker"].get<bool>();
    }
    json snap;
    sessions_.with(std::string(parts[2]), [&](PlaySession& s) {
      s.submit_bid(bid);
      snap = s.snapshot();
    });
    return {200, snap};
  }
  if (is({"api", "session", "", "move"})) {
    expect("POST");
    const Dollars index = int_field(body, "index");
    json snap;
    sessions_.with(std::string(parts[2]), [&](PlaySession& s) {
      s.submit_move(static_cast<std::size_t>(index));
      snap = s.snapshot();
    });
    return {200, snap};
  }
  throw ApiError{404, "not_found", "no route for " + std::string(path)};
}

Response Service::solve(const json& body) {
  const std::string text = string_field(body, "game");
  const Dollars tb = int_field(body, "tb");
  if (text.size() > limits_.max_game_text) bad_request("game text too long");
  if (tb > limits_.max_total)
    bad_request("tb above the service limit of " + std::to_string(limits_.max_total));
  const Game g = parse(text);
  return {200, outcome_record(solver_for(tb)->outcome(g))};
}

Response Service::construct(const json& body) {
  const Dollars tb = int_field(body, "tb");
  if (tb > limits_.max_total)
    bad_request("tb above the service limit of " + std::to_string(limits_.max_total));
  const ShortForm sf{int_field(body, "a"), int_field(body, "b")};
  const Construction c = construct_verified(tb, sf);
  return {200, {{"game", render(c.game)}, {"word", word(c.outcome)}}};
}

Response Service::lattice(std::string_view tb_text) {
  const Dollars tb = parse_total(tb_text);
  if (tb > limits_.max_lattice_total)
    bad_request("tb above the service limit of " + std::to_string(limits_.max_lattice_total));
  return {200, lattice_record(build_lattice(tb))};
}

Response Service::create_session(const json& body) {
  const std::string text = string_field(body, "game");
  if (text.size() > limits_.max_game_text) bad_request("game text too long");
  const Dollars tb = int_field(body, "tb");
  if (tb > limits_.max_total)
    bad_request("tb above the service limit of " + std::to_string(limits_.max_total));
  const BudgetState state{tb, int_field(body, "left_budget"), player_field(body, "marker")};
  state.validate();
  const Player human = player_field(body, "human_side");
  const Game g = parse(text);
  const std::string id = sessions_.create(g, state, human);
  json snap;
  sessions_.with(id, [&](PlaySession& s) { snap = s.snapshot(); });
  return {201, snap};
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>()) {
  auto dispatch = [&service](const httplib::Request& req, httplib::Response& res) {
    const Response r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  impl_->server.Get(".*", dispatch);
  impl_->server.Post(".*", dispatch);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool serve(Service& service, const std::string& host, int port) {
  HttpServer server(service);
  if (server.bind(host, port) < 0) return false;
  return server.listen();
}

}  // namespace richman
