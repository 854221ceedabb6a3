#include "takeaway/game_service.hpp"

#include "takeaway/closed_form.hpp"
#include "takeaway/error.hpp"
#include "takeaway/instance_io.hpp"
#include "takeaway/json_codec.hpp"
#include "takeaway/structure.hpp"

namespace takeaway {

using nlohmann::json;

namespace {

/// Protocol-level failure carrying the wire error code.
struct ProtocolError {
  int status;
  std::string code;
  std::string message;
};

ProtocolError from_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::IllegalMove: return {400, "illegal_move", e.what()};
    case ErrorCode::SizeBoundExceeded: return {422, "size_bound", e.what()};
    default: return {400, "malformed", e.what()};
  }
}

ServiceResponse error_response(const ProtocolError& e) {
  return {e.status, json{{"error_code", e.code}, {"message", e.message}}.dump()};
}

std::vector<std::string_view> split_path(std::string_view path) {
  if (auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    const auto slash = path.find('/');
    auto head = path.substr(0, slash);
    if (!head.empty()) parts.push_back(head);
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return parts;
}

json parse_body(std::string_view body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ProtocolError{400, "malformed", "request body is not valid JSON"};
  return doc;
}

}  // namespace

GameService::GameService() : GameService(Options{}) {}

GameService::GameService(Options options)
    : options_(options), table_(std::make_shared<TranspositionTable>()) {}

std::size_t GameService::session_count() const {
  std::lock_guard lock(sessions_mutex_);
  return sessions_.size();
}

GrundySolver GameService::solver() const {
  SolveOptions opts;
  opts.max_vertices = options_.max_vertices;
  return GrundySolver(table_, opts);
}

std::shared_ptr<GameService::Session> GameService::find_session(const std::string& id) const {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ProtocolError{404, "unknown_session", "no session " + id};
  return it->second;
}

std::string GameService::to_move(const Session& s) const {
  if (s.current.is_terminal()) return "none";
  if (s.auto_reply) return "human";
  return s.history.size() % 2 == 0 ? "player1" : "player2";
}

ServiceResponse GameService::handle(std::string_view method, std::string_view path,
                                    std::string_view body) {
  try {
    const auto parts = split_path(path);
    if (parts.size() < 2 || parts[0] != "api" || parts[1] != "games") {
      throw ProtocolError{404, "malformed", "unknown route " + std::string(path)};
    }
    if (parts.size() == 2 && method == "POST") {
      return {201, create_game(parse_body(body)).dump()};
    }
    if (parts.size() >= 3) {
      auto session = find_session(std::string(parts[2]));
      std::lock_guard lock(session->mutex);
      if (parts.size() == 3 && method == "GET") return {200, game_state(*session).dump()};
      if (parts.size() == 4 && parts[3] == "moves" && method == "POST") {
        return {200, play(*session, parse_body(body)).dump()};
      }
      if (parts.size() == 4 && parts[3] == "advice" && method == "GET") {
        return {200, advice(*session).dump()};
      }
    }
    throw ProtocolError{404, "malformed",
                        "unknown route " + std::string(method) + " " + std::string(path)};
  } catch (const ProtocolError& e) {
    return error_response(e);
  } catch (const Error& e) {
    return error_response(from_error(e));
  } catch (const json::exception& e) {
    return error_response({400, "malformed", e.what()});
  }
}

json GameService::create_game(const json& body) {
  if (!body.is_object()) throw ProtocolError{400, "malformed", "body must be an object"};
  const json& doc = body.contains("instance") ? body["instance"] : body;
  Position p = instance_from_json(doc);
  if (p.vertex_count() > options_.max_vertices) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "instance has " + std::to_string(p.vertex_count()) + " vertices, bound is " +
                    std::to_string(options_.max_vertices));
  }
  bool auto_reply = options_.auto_reply;
  if (auto it = body.find("auto_reply"); it != body.end()) {
    if (!it->is_boolean()) throw ProtocolError{400, "malformed", "auto_reply must be a boolean"};
    auto_reply = it->get<bool>();
  }

  GrundySolver s = solver();
  const GrundyResult g = s.solve(p);

  auto session = std::make_shared<Session>();
  session->initial = p;
  session->current = p;
  session->auto_reply = auto_reply;

  std::string id;
  {
    std::lock_guard lock(sessions_mutex_);
    std::string n = std::to_string(next_session_++);
    id = "g" + std::string(n.size() < 6 ? 6 - n.size() : 0, '0') + n;
    sessions_.emplace(id, session);
  }

  const StructureReport report = classify(p);
  json structure = report_to_json(p, report);
  structure["prediction"] = prediction_to_json(predict(report));
  if (report.is_mixed_shape()) {
    structure["lemmas"] = lemmas_to_json(check_lemmas(report));
  } else {
    structure["lemmas"] = nullptr;
  }
  return json{{"session_id", id},
              {"position", instance_to_json(p)},
              {"structure_report", std::move(structure)},
              {"grundy", grundy_to_json(p, g)},
              {"to_move", to_move(*session)}};
}

json GameService::game_state(Session& s) {
  GrundySolver engine = solver();
  json history = json::array();
  for (const auto& h : s.history) history.push_back(json{{"mover", h.mover}, {"move", h.move}});
  json state{{"position", instance_to_json(s.current)},
             {"history", std::move(history)},
             {"grundy", grundy_to_json(s.current, engine.solve(s.current))},
             {"to_move", to_move(s)},
             {"game_over", s.current.is_terminal()}};
  state["winner"] =
      s.current.is_terminal() && !s.history.empty() ? json(s.history.back().mover) : json(nullptr);
  return state;
}

json GameService::play(Session& s, const json& move_doc) {
  if (s.current.is_terminal()) {
    throw Error(ErrorCode::IllegalMove, "game is over");
  }
  GrundySolver engine = solver();
  const Move human = move_from_json(s.current, move_doc);
  const std::string mover = to_move(s);
  const json human_json = move_to_json(s.current, human);
  s.current = s.current.after(human);
  s.history.push_back({mover, human_json});
  json applied{{"mover", mover}, {"move", human_json}, {"value_after", engine.value(s.current)}};

  json reply = nullptr;
  if (s.auto_reply && !s.current.is_terminal()) {
    const Move chosen = engine_move(engine, s.current);
    const json chosen_json = move_to_json(s.current, chosen);
    s.current = s.current.after(chosen);
    s.history.push_back({"engine", chosen_json});
    reply = json{{"mover", "engine"}, {"move", chosen_json},
                 {"value_after", engine.value(s.current)}};
  }

  json out{{"applied", std::move(applied)},
           {"engine_reply", std::move(reply)},
           {"position", instance_to_json(s.current)},
           {"grundy", grundy_to_json(s.current, engine.solve(s.current))},
           {"to_move", to_move(s)},
           {"game_over", s.current.is_terminal()}};
  out["winner"] =
      s.current.is_terminal() ? json(s.history.back().mover) : json(nullptr);
  return out;
}

json GameService::advice(Session& s) {
  GrundySolver engine = solver();
  const GrundyResult g = engine.solve(s.current);
  json winning = json::array();
  for (const Move& m : g.winning_moves) winning.push_back(move_to_json(s.current, m));
  return json{{"value", g.value}, {"winning_moves", std::move(winning)}};
}

}  // namespace takeaway
