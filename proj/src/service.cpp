#include "bpm/service.hpp"

#include <array>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace bpm::service {

using nlohmann::json;

namespace {

Response error(int status, std::string_view code, const std::string& detail) {
  return {status, json{{"error", code}, {"detail", detail}}};
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotTileable:
    case ErrorCode::InvalidBoard: return 422;
    case ErrorCode::GameOver: return 409;
    default: return 400;
  }
}

json cell_json(const domino::Cell& c) { return json::array({c.row, c.col}); }

json placements_json(const std::vector<domino::Placement>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(placement_json(p));
  return out;
}

domino::Cell parse_cell(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw std::invalid_argument("a cell must be [row, col]");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

std::shared_ptr<SessionStore::Entry> SessionStore::insert(domino::GameSession session) {
  auto entry = std::make_shared<Entry>(std::move(session));
  const std::string id = entry->session.id();
  std::lock_guard lock(mutex_);
  recency_.push_front(id);
  slots_[id] = Slot{entry, recency_.begin()};
  while (slots_.size() > capacity_) {
    slots_.erase(recency_.back());
    recency_.pop_back();
  }
  return entry;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto it = slots_.find(id);
  if (it == slots_.end()) return nullptr;
  recency_.splice(recency_.begin(), recency_, it->second.position);
  return it->second.entry;
}

bool SessionStore::erase(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto it = slots_.find(id);
  if (it == slots_.end()) return false;
  recency_.erase(it->second.position);
  slots_.erase(it);
  return true;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return slots_.size();
}

std::string random_session_id() {
  std::random_device rd;
  std::array<char, 33> buf{};
  for (int k = 0; k < 4; ++k) std::snprintf(buf.data() + 8 * k, 9, "%08x", static_cast<unsigned>(rd()));
  return std::string(buf.data(), 32);
}

json placement_json(const domino::Placement& p) {
  return json{{"cells", json::array({cell_json(p.first), cell_json(p.second)})}};
}

json session_json(const domino::GameSession& s) {
  json cells = json::array();
  for (const auto& c : s.board().cells()) cells.push_back(cell_json(c));
  json out{
      {"session_id", s.id()},
      {"rows", s.board().rows()},
      {"cols", s.board().cols()},
      {"board", s.board().to_rows()},
      {"cells", std::move(cells)},
      {"tileable", true},
      {"status", to_string(s.status())},
      {"bad_move_count", s.bad_move_count()},
      {"max_bad_moves", s.max_bad_moves()},
      {"placements", placements_json(s.placements())},
      {"allowed_moves", json::array()},
  };
  if (s.status() == domino::GameStatus::InProgress) out["allowed_moves"] = placements_json(s.allowed_moves());
  return out;
}

Response GameService::create_session(const std::string& body) {
  std::vector<std::string> rows;
  Index max_bad_moves = 0;
  try {
    const json req = json::parse(body);
    if (!req.is_object() || !req.contains("board") || !req["board"].is_array()) {
      return error(400, "malformed_request", "board must be a list of row strings");
    }
    for (const auto& row : req["board"]) {
      if (!row.is_string()) return error(400, "malformed_request", "board rows must be strings");
      rows.push_back(row.get<std::string>());
    }
    const auto limit = req.value("max_bad_moves", json());
    if (!limit.is_number_integer() || limit.get<long long>() < 1 || limit.get<long long>() > INT32_MAX) {
      return error(400, "malformed_request", "max_bad_moves must be an integer >= 1");
    }
    max_bad_moves = limit.get<Index>();
  } catch (const json::exception& e) {
    return error(400, "malformed_request", e.what());
  }

  try {
    domino::GameSession session(random_session_id(), domino::Board::from_rows(rows), max_bad_moves);
    auto entry = store_.insert(std::move(session));
    std::lock_guard lock(entry->mutex);
    return {201, session_json(entry->session)};
  } catch (const Error& e) {
    return error(status_for(e.code()), to_string(e.code()), e.what());
  }
}

Response GameService::get_session(const std::string& id) {
  const auto entry = store_.find(id);
  if (!entry) return error(404, "unknown_session", "no session '" + id + "'");
  std::lock_guard lock(entry->mutex);
  return {200, session_json(entry->session)};
}

Response GameService::delete_session(const std::string& id) {
  if (!store_.erase(id)) return error(404, "unknown_session", "no session '" + id + "'");
  return {204, nullptr};
}

Response GameService::post_move(const std::string& id, const std::string& body) {
  const auto entry = store_.find(id);
  if (!entry) return error(404, "unknown_session", "no session '" + id + "'");

  domino::Placement placement;
  try {
    const json req = json::parse(body);
    if (!req.is_object() || !req.contains("cells") || !req["cells"].is_array() || req["cells"].size() != 2) {
      return error(400, "malformed_request", "cells must be [[r1,c1],[r2,c2]]");
    }
    placement = domino::Placement(parse_cell(req["cells"][0]), parse_cell(req["cells"][1]));
  } catch (const json::exception& e) {
    return error(400, "malformed_request", e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, "malformed_request", e.what());
  }

  std::lock_guard lock(entry->mutex);
  try {
    const auto outcome = entry->session.apply_move(placement);
    json out{
        {"accepted", outcome.accepted},
        {"bad_move_count", outcome.bad_move_count},
        {"max_bad_moves", outcome.max_bad_moves},
        {"placements", placements_json(outcome.placements)},
        {"allowed_moves", placements_json(outcome.allowed_moves)},
        {"status", to_string(outcome.status)},
    };
    if (!outcome.accepted) out["reason"] = outcome.reason;
    return {200, std::move(out)};
  } catch (const Error& e) {
    return error(status_for(e.code()), to_string(e.code()), e.what());
  }
}

Response GameService::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::string kPrefix = "/api/sessions";
  if (path.rfind(kPrefix, 0) != 0) return error(404, "not_found", path);
  std::string rest = path.substr(kPrefix.size());
  if (rest.empty() || rest == "/") {
    if (method == "POST") return create_session(body);
    return error(405, "method_not_allowed", method + " " + path);
  }
  if (rest[0] != '/') return error(404, "not_found", path);
  rest.erase(0, 1);
  const auto slash = rest.find('/');
  const std::string id = rest.substr(0, slash);
  if (id.empty()) return error(404, "not_found", path);
  if (slash == std::string::npos) {
    if (method == "GET") return get_session(id);
    if (method == "DELETE") return delete_session(id);
    return error(405, "method_not_allowed", method + " " + path);
  }
  if (rest.substr(slash) == "/moves") {
    if (method == "POST") return post_move(id, body);
    return error(405, "method_not_allowed", method + " " + path);
  }
  return error(404, "not_found", path);
}

}  // namespace bpm::service
