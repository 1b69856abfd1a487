#pragma once

#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "bpm/domino.hpp"

namespace bpm::service {

struct Response {
  int status = 200;
  nlohmann::json body;  // null for 204
};

// In-memory sessions, least recently used evicted beyond `capacity`.
// Operations on one session are serialized by that session's mutex; the
// store lock is held only for lookup and bookkeeping.
class SessionStore {
 public:
  struct Entry {
    std::mutex mutex;
    domino::GameSession session;
    explicit Entry(domino::GameSession s) : session(std::move(s)) {}
  };

  explicit SessionStore(std::size_t capacity = 1024) : capacity_(capacity) {}

  std::shared_ptr<Entry> insert(domino::GameSession session);
  std::shared_ptr<Entry> find(const std::string& id);
  bool erase(const std::string& id);
  std::size_t size() const;

 private:
  struct Slot {
    std::shared_ptr<Entry> entry;
    std::list<std::string>::iterator position;
  };

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<std::string> recency_;  // front is most recent
  std::unordered_map<std::string, Slot> slots_;
};

// 128 random bits from the system entropy source, hex encoded.
std::string random_session_id();

// Request handlers for the domino game API. Bodies are JSON text; every
// response body is JSON, errors as {"error": code, "detail": text}.
//
//   POST   /api/sessions             {board: [row...], max_bad_moves}
//   GET    /api/sessions/{id}
//   DELETE /api/sessions/{id}
//   POST   /api/sessions/{id}/moves  {cells: [[r1,c1],[r2,c2]]}
class GameService {
 public:
  explicit GameService(std::size_t capacity = 1024) : store_(capacity) {}

  Response create_session(const std::string& body);
  Response get_session(const std::string& id);
  Response delete_session(const std::string& id);
  Response post_move(const std::string& id, const std::string& body);

  // Routes by method and path; 404 for unknown routes, 405 for a known path
  // with the wrong method.
  Response handle(const std::string& method, const std::string& path, const std::string& body);

  SessionStore& store() noexcept { return store_; }

 private:
  SessionStore store_;
};

nlohmann::json placement_json(const domino::Placement& p);
nlohmann::json session_json(const domino::GameSession& s);

}  // namespace bpm::service
