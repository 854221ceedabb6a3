#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "takeaway/grundy.hpp"
#include "takeaway/position.hpp"

namespace takeaway {

struct ServiceResponse {
  int status = 200;
  std::string body;  // JSON document
};

/// In-memory game sessions behind the HTTP wire protocol:
///
///   POST /api/games                 {"instance": {...}, "auto_reply": bool}
///   GET  /api/games/{id}
///   POST /api/games/{id}/moves      {"type":"vertex","name":"A"} | {"type":"edge","members":[...]}
///   GET  /api/games/{id}/advice
///
/// Errors come back as {"error_code", "message"} with one of the codes
/// illegal_move, unknown_session, malformed, size_bound. The transport is
/// not part of this class; `handle` takes an already-decoded request.
class GameService {
 public:
  struct Options {
    bool auto_reply = true;
    std::size_t max_vertices = kDefaultVertexBound;
  };

  GameService();
  explicit GameService(Options options);

  ServiceResponse handle(std::string_view method, std::string_view path, std::string_view body);

  std::size_t session_count() const;

 private:
  struct HistoryEntry {
    std::string mover;
    nlohmann::json move;
  };

  struct Session {
    std::mutex mutex;
    Position initial;
    Position current;
    std::vector<HistoryEntry> history;
    bool auto_reply = true;
  };

  nlohmann::json create_game(const nlohmann::json& body);
  nlohmann::json game_state(Session& s);
  nlohmann::json play(Session& s, const nlohmann::json& move);
  nlohmann::json advice(Session& s);

  std::shared_ptr<Session> find_session(const std::string& id) const;
  GrundySolver solver() const;
  std::string to_move(const Session& s) const;

  Options options_;
  std::shared_ptr<TranspositionTable> table_;
  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_session_ = 1;
};

}  // namespace takeaway
