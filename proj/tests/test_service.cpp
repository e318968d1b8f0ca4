#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"

#include "richman/service.hpp"

using namespace richman;

namespace {

Response post(Service& s, const std::string& path, const json& body) {
  return s.handle("POST", path, body.dump());
}

std::string new_session(Service& s, const json& body) {
  const Response r = post(s, "/api/session", body);
  EXPECT_EQ(r.status, 201) << r.body.dump();
  return r.body.value("id", "");
}

}  // namespace

TEST(Service, Solve) {
  Service s;
  const Response r = post(s, "/api/solve", {{"game", "*"}, {"tb", 1}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body,
            json::parse(R"({"tb":1,"word":"LRLR","short_form":{"a":1,"b":1},"feasible":true})"));
  EXPECT_EQ(post(s, "/api/solve", {{"game", "{*|v}"}, {"tb", 2}}).body["word"], "LRRLRR");
}

TEST(Service, SolveErrors) {
  Service s;
  auto code = [&](const json& body) {
    const Response r = post(s, "/api/solve", body);
    EXPECT_EQ(r.status, 400);
    return r.body["error"].get<std::string>();
  };
  EXPECT_EQ(code({{"game", "{0|"}, {"tb", 1}}), "parse_error");
  EXPECT_EQ(code({{"tb", 1}}), "bad_request");
  EXPECT_EQ(code({{"game", "*"}, {"tb", -1}}), "bad_request");
  EXPECT_EQ(code({{"game", "*"}, {"tb", "1"}}), "bad_request");
  EXPECT_EQ(code({{"game", "*"}, {"tb", 1000}}), "bad_request");
  EXPECT_EQ(code(json::array()), "bad_request");
  const Response bad = s.handle("POST", "/api/solve", "{not json");
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(bad.body["error"], "bad_json");
  EXPECT_TRUE(bad.body.contains("message"));
}

TEST(Service, Construct) {
  Service s;
  const Response r = post(s, "/api/construct", {{"tb", 3}, {"a", 2}, {"b", 0}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["word"], "LLRRLLLL");
  EXPECT_EQ(post(s, "/api/solve", {{"game", r.body["game"]}, {"tb", 3}}).body["word"], "LLRRLLLL");

  const Response bad = post(s, "/api/construct", {{"tb", 3}, {"a", 0}, {"b", 2}});
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(bad.body["error"], "infeasible_short_form");
}

TEST(Service, Lattice) {
  Service s;
  const Response r = s.handle("GET", "/api/lattice/0", "");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["nodes"].size(), 4u);
  EXPECT_EQ(r.body["edges"].size(), 4u);
  EXPECT_EQ(s.handle("GET", "/api/lattice/1", "").body["nodes"].size(), 8u);
  EXPECT_EQ(s.handle("GET", "/api/lattice/x", "").status, 400);
  EXPECT_EQ(s.handle("GET", "/api/lattice/-1", "").status, 400);
  EXPECT_EQ(s.handle("POST", "/api/lattice/1", "{}").status, 405);
}

TEST(Service, Routing) {
  Service s;
  const Response r = s.handle("GET", "/api/nothing", "");
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(r.body["error"], "not_found");
  EXPECT_EQ(s.handle("GET", "/api/solve", "").status, 405);
  EXPECT_EQ(s.handle("GET", "/api/session/none", "").status, 404);
  EXPECT_EQ(s.handle("GET", "/api/session/none", "").body["error"], "unknown_session");
}

TEST(Service, SessionStarLine) {
  Service s;
  const std::string id = new_session(
      s, {{"game", "*"}, {"tb", 2}, {"left_budget", 1}, {"marker", "Left"}, {"human_side", "Right"}});
  ASSERT_FALSE(id.empty());
  json snap = s.handle("GET", "/api/session/" + id, "").body;
  EXPECT_EQ(snap["phase"], "awaiting_bid");

  Response r = post(s, "/api/session/" + id + "/bid", {{"amount", 1}, {"include_marker", false}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["history"][0]["left_bid"], json::parse(R"({"amount":1,"include_marker":true})"));
  EXPECT_EQ(r.body["game"], "0");
  EXPECT_EQ(r.body["phase"], "awaiting_bid");

  r = post(s, "/api/session/" + id + "/bid", {{"amount", 0}});
  EXPECT_EQ(r.body["phase"], "finished");
  EXPECT_EQ(r.body["winner"], "Left");

  // the snapshot reflects the last round
  snap = s.handle("GET", "/api/session/" + id, "").body;
  EXPECT_EQ(snap, r.body);

  r = post(s, "/api/session/" + id + "/bid", {{"amount", 0}});
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(r.body["error"], "wrong_phase");
}

TEST(Service, SessionErrors) {
  Service s;
  const json start = {{"game", "*"}, {"tb", 2}, {"left_budget", 1}, {"marker", "Left"},
                      {"human_side", "Left"}};
  const std::string id = new_session(s, start);
  const std::string base = "/api/session/" + id;

  Response r = post(s, base + "/bid", {{"amount", 5}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["error"], "illegal_bid");
  EXPECT_EQ(post(s, base + "/move", {{"index", 0}}).status, 409);

  r = post(s, base + "/bid", {{"amount", 1}, {"include_marker", true}});
  EXPECT_EQ(r.body["phase"], "awaiting_human_move");
  EXPECT_EQ(r.body["options"], json::array({"0"}));
  r = post(s, base + "/move", {{"index", 3}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["error"], "bad_move_index");
  r = post(s, base + "/move", {{"index", 0}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["game"], "0");

  json bad_budget = start;
  bad_budget["left_budget"] = 3;
  r = post(s, "/api/session", bad_budget);
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["error"], "invalid_budget");
  json bad_side = start;
  bad_side["human_side"] = "Up";
  EXPECT_EQ(post(s, "/api/session", bad_side).status, 400);
  json bad_game = start;
  bad_game["game"] = "{|";
  EXPECT_EQ(post(s, "/api/session", bad_game).body["error"], "parse_error");
  EXPECT_EQ(post(s, "/api/session/nope/bid", {{"amount", 0}}).status, 404);
}

TEST(Service, HttpRoundTrip) {
  Service service;
  HttpServer server(service);
  const int port = server.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread loop([&] { server.listen(); });

  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);
  httplib::Result res;
  for (int attempt = 0; attempt < 50; ++attempt) {
    res = client.Post("/api/solve", R"({"game":"*","tb":1})", "application/json");
    if (res) break;
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["word"], "LRLR");
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");

  auto lattice = client.Get("/api/lattice/0");
  ASSERT_TRUE(lattice);
  EXPECT_EQ(json::parse(lattice->body)["nodes"].size(), 4u);

  auto missing = client.Get("/api/session/zzz");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  server.stop();
  loop.join();
}
