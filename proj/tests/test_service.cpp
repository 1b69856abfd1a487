#include <doctest.h>

#include <httplib.h>

#include <set>
#include <thread>

#include "bpm/server.hpp"
#include "bpm/service.hpp"

using namespace bpm;
using namespace bpm::service;
using nlohmann::json;

namespace {

std::string create_body(std::vector<std::string> rows, int max_bad_moves) {
  return json{{"board", std::move(rows)}, {"max_bad_moves", max_bad_moves}}.dump();
}

std::string move_body(int r1, int c1, int r2, int c2) {
  return json{{"cells", {{r1, c1}, {r2, c2}}}}.dump();
}

std::string moves_path(const std::string& id) { return "/api/sessions/" + id + "/moves"; }

// allowed_moves as recomputed by a domino session that replays the placements.
json replayed_allowed(const json& state, int max_bad_moves) {
  std::vector<std::string> rows;
  for (const auto& r : state["board"]) rows.push_back(r.get<std::string>());
  auto s = domino::new_session(domino::Board::from_rows(rows), max_bad_moves);
  for (const auto& p : state["placements"]) {
    const auto& c = p["cells"];
    s.apply_move({{c[0][0].get<int>(), c[0][1].get<int>()}, {c[1][0].get<int>(), c[1][1].get<int>()}});
  }
  json out = json::array();
  if (s.status() == domino::GameStatus::InProgress)
    for (const auto& p : s.allowed_moves()) out.push_back(placement_json(p));
  return out;
}

}  // namespace

TEST_CASE("create_session") {
  GameService svc;
  const auto ok = svc.create_session(create_body({"##", "##"}, 3));
  CHECK(ok.status == 201);
  CHECK(ok.body["allowed_moves"].size() == 4);
  CHECK(ok.body["tileable"] == true);
  CHECK(ok.body["session_id"].get<std::string>().size() == 32);
  CHECK(ok.body["cells"].size() == 4);

  const auto odd = svc.create_session(create_body({"###"}, 3));
  CHECK(odd.status == 422);
  CHECK(odd.body["error"] == "not_tileable");

  const auto split = svc.create_session(create_body({"##.", "..#", "..#"}, 3));
  CHECK(split.status == 422);
  CHECK(split.body["error"] == "invalid_board");

  CHECK(svc.create_session("{").status == 400);
  CHECK(svc.create_session(create_body({"##"}, 0)).status == 400);
  CHECK(svc.create_session(R"({"board": "##", "max_bad_moves": 1})").status == 400);
  const auto bad_char = svc.create_session(create_body({"#?"}, 1));
  CHECK(bad_char.status == 400);
  CHECK(bad_char.body["error"] == "malformed_board");
}

TEST_CASE("2x2 playout through the handlers") {
  GameService svc;
  const std::string id = svc.create_session(create_body({"##", "##"}, 3)).body["session_id"];

  const auto fresh = svc.handle("GET", "/api/sessions/" + id, "");
  CHECK(fresh.status == 200);
  CHECK(fresh.body["status"] == "in_progress");
  CHECK(fresh.body["placements"].empty());

  const auto apart = svc.handle("POST", moves_path(id), move_body(0, 0, 1, 1));
  CHECK(apart.status == 400);
  CHECK(apart.body["error"] == "not_adjacent");
  CHECK(svc.get_session(id).body["bad_move_count"] == 0);

  const auto first = svc.handle("POST", moves_path(id), move_body(0, 0, 0, 1));
  CHECK(first.status == 200);
  CHECK(first.body["accepted"] == true);
  CHECK_FALSE(first.body.contains("reason"));
  CHECK(first.body["allowed_moves"] == replayed_allowed(svc.get_session(id).body, 3));
  const auto second = svc.handle("POST", moves_path(id), move_body(1, 0, 1, 1));
  CHECK(second.body["accepted"] == true);
  CHECK(second.body["status"] == "won");
  CHECK(svc.get_session(id).body["status"] == "won");

  const auto late = svc.handle("POST", moves_path(id), move_body(1, 0, 1, 1));
  CHECK(late.status == 409);
  CHECK(late.body["error"] == "game_over");

  CHECK(svc.handle("DELETE", "/api/sessions/" + id, "").status == 204);
  CHECK(svc.handle("GET", "/api/sessions/" + id, "").status == 404);
  CHECK(svc.handle("DELETE", "/api/sessions/" + id, "").status == 404);
}

TEST_CASE("forbidden placement and losing") {
  GameService svc;
  const std::string id = svc.create_session(create_body({"####"}, 2)).body["session_id"];
  const auto bad = svc.post_move(id, move_body(0, 1, 0, 2));
  CHECK(bad.status == 200);
  CHECK(bad.body["accepted"] == false);
  CHECK(bad.body["reason"] == "blocks_completion");
  CHECK(bad.body["bad_move_count"] == 1);
  CHECK(bad.body["status"] == "in_progress");
  const auto lost = svc.post_move(id, move_body(0, 1, 0, 2));
  CHECK(lost.body["bad_move_count"] == 2);
  CHECK(lost.body["status"] == "lost");
  CHECK(lost.body["allowed_moves"].empty());
  CHECK(svc.get_session(id).body["status"] == "lost");
}

TEST_CASE("routing") {
  GameService svc;
  CHECK(svc.handle("GET", "/api/sessions", "").status == 405);
  CHECK(svc.handle("PUT", "/api/sessions/abc", "").status == 405);
  CHECK(svc.handle("GET", "/api/other", "").status == 404);
  CHECK(svc.handle("GET", "/api/sessions/abc/extra", "").status == 404);
  CHECK(svc.handle("POST", moves_path("nope"), move_body(0, 0, 0, 1)).status == 404);
  const std::string id = svc.create_session(create_body({"##"}, 1)).body["session_id"];
  CHECK(svc.post_move(id, R"({"cells": [[0, 0]]})").status == 400);
  CHECK(svc.post_move(id, R"({"cells": [[0, 0], ["a", 1]]})").status == 400);
  CHECK(svc.post_move(id, move_body(0, 0, 0, 2)).body["error"] == "off_board");
}

TEST_CASE("session store evicts the least recently used") {
  GameService svc(2);
  const std::string a = svc.create_session(create_body({"##"}, 1)).body["session_id"];
  const std::string b = svc.create_session(create_body({"##"}, 1)).body["session_id"];
  CHECK(svc.get_session(a).status == 200);  // a is now more recent than b
  const std::string c = svc.create_session(create_body({"##"}, 1)).body["session_id"];
  CHECK(svc.store().size() == 2);
  CHECK(svc.get_session(a).status == 200);
  CHECK(svc.get_session(b).status == 404);
  CHECK(svc.get_session(c).status == 200);
}

TEST_CASE("session ids are distinct") {
  std::set<std::string> ids;
  for (int k = 0; k < 1000; ++k) ids.insert(random_session_id());
  CHECK(ids.size() == 1000);
}

TEST_CASE("live HTTP server") {
  GameService svc;
  HttpServer server(svc);
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen(); });

  httplib::Client client("127.0.0.1", port);
  const auto created = client.Post("/api/sessions", create_body({"##", "##"}, 1), "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  CHECK(created->get_header_value("Content-Type").find("application/json") == 0);
  CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
  const std::string id = json::parse(created->body)["session_id"];

  const auto first = client.Post(moves_path(id).c_str(), move_body(0, 0, 1, 0), "application/json");
  REQUIRE(first);
  CHECK(json::parse(first->body)["accepted"] == true);
  const auto second = client.Post(moves_path(id).c_str(), move_body(0, 1, 1, 1), "application/json");
  REQUIRE(second);
  CHECK(json::parse(second->body)["status"] == "won");

  const auto state = client.Get(("/api/sessions/" + id).c_str());
  REQUIRE(state);
  CHECK(json::parse(state->body)["status"] == "won");

  const auto preflight = client.Options("/api/sessions");
  REQUIRE(preflight);
  CHECK(preflight->status == 204);

  const auto removed = client.Delete(("/api/sessions/" + id).c_str());
  REQUIRE(removed);
  CHECK(removed->status == 204);
  const auto gone = client.Get(("/api/sessions/" + id).c_str());
  REQUIRE(gone);
  CHECK(gone->status == 404);
  CHECK(json::parse(gone->body)["error"] == "unknown_session");

  server.stop();
  worker.join();
}
