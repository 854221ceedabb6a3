#include "takeaway/json_codec.hpp"

#include "takeaway/error.hpp"
#include "takeaway/instance_io.hpp"

namespace takeaway {

using nlohmann::json;

namespace {

json names_of(const Position& p, VertexMask mask) {
  json out = json::array();
  for (VertexId v : p.vertices()) {
    if ((mask >> v.value) & 1U) out.push_back(p.name(v));
  }
  return out;
}

json edge_names(const Position& p, const Hyperedge& e) { return names_of(p, e.mask()); }

}  // namespace

json move_to_json(const Position& p, const Move& m) {
  if (const auto* rv = std::get_if<RemoveVertex>(&m)) {
    return json{{"type", "vertex"}, {"name", p.name(rv->vertex)}};
  }
  return json{{"type", "edge"}, {"members", edge_names(p, std::get<RemoveEdge>(m).edge)}};
}

Move move_from_json(const Position& p, const json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string()) {
    throw Error(ErrorCode::MalformedDocument, "move needs a string field \"type\"");
  }
  const auto type = doc["type"].get<std::string>();
  if (type == "vertex") {
    if (!doc.contains("name") || !doc["name"].is_string()) {
      throw Error(ErrorCode::MalformedDocument, "vertex move needs a string field \"name\"");
    }
    const auto name = doc["name"].get<std::string>();
    auto v = p.find_vertex(name);
    if (!v) throw Error(ErrorCode::IllegalMove, "vertex " + name + " is not in the position");
    return RemoveVertex{*v};
  }
  if (type == "edge") {
    if (!doc.contains("members") || !doc["members"].is_array()) {
      throw Error(ErrorCode::MalformedDocument, "edge move needs an array field \"members\"");
    }
    VertexMask mask = 0;
    for (const json& n : doc["members"]) {
      if (!n.is_string()) {
        throw Error(ErrorCode::MalformedDocument, "edge members must be strings");
      }
      auto v = p.find_vertex(n.get<std::string>());
      if (!v) {
        throw Error(ErrorCode::IllegalMove,
                    "vertex " + n.get<std::string>() + " is not in the position");
      }
      mask |= VertexMask{1} << v->value;
    }
    if (std::popcount(mask) < 2 || !p.has_edge(Hyperedge::from_mask(mask))) {
      throw Error(ErrorCode::IllegalMove, "hyperedge is not in the position");
    }
    return RemoveEdge{Hyperedge::from_mask(mask)};
  }
  throw Error(ErrorCode::MalformedDocument, "move type must be \"vertex\" or \"edge\"");
}

json report_to_json(const Position& p, const StructureReport& r) {
  json doc = json::object();
  doc["group"] = to_string(r.group);
  doc["conforming"] = r.conforming();
  doc["special_vertex"] = r.special_vertex ? json(p.name(*r.special_vertex)) : json(nullptr);
  doc["cat_x_edge"] = r.cat_x_edge ? edge_names(p, *r.cat_x_edge) : json(nullptr);
  json caty = json::array();
  for (const Hyperedge& e : r.cat_y_edges) caty.push_back(edge_names(p, e));
  doc["cat_y_edges"] = std::move(caty);
  json subs = json::object();
  for (const auto& [v, s] : r.subcategory) subs[p.name(v)] = to_string(s);
  doc["subcategories"] = std::move(subs);
  json degree = json::object();
  for (const auto& [v, d] : r.cat_y_degree) degree[p.name(v)] = d;
  doc["cat_y_degree"] = std::move(degree);
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(json{{"kind", to_string(v.kind)}, {"detail", v.detail}});
  }
  doc["violations"] = std::move(violations);
  return doc;
}

json lemmas_to_json(std::span<const LemmaCheck> checks) {
  json out = json::array();
  for (const auto& c : checks) {
    out.push_back(json{{"id", to_string(c.id)},
                       {"applies", c.applies},
                       {"holds", c.holds},
                       {"witness", c.witness}});
  }
  return out;
}

json prediction_to_json(const Prediction& pr) {
  return json{{"value", pr.value ? json(*pr.value) : json(nullptr)},
              {"source", to_string(pr.source)}};
}

json grundy_to_json(const Position& p, const GrundyResult& g) {
  json options = json::array();
  for (const auto& o : g.options) {
    options.push_back(json{{"move", move_to_json(p, o.move)}, {"value", o.value}});
  }
  json winning = json::array();
  for (const auto& m : g.winning_moves) winning.push_back(move_to_json(p, m));
  return json{{"value", g.value}, {"options", std::move(options)},
              {"winning_moves", std::move(winning)}};
}

json record_to_json(const VerificationRecord& rec) {
  json match;
  switch (rec.match) {
    case MatchStatus::Match: match = true; break;
    case MatchStatus::Mismatch: match = false; break;
    case MatchStatus::NoPrediction: match = "no_prediction"; break;
  }
  return json{{"instance_id", rec.instance_id},
              {"instance", json::parse(rec.instance)},
              {"group", to_string(rec.group)},
              {"v_catx", rec.v_catx},
              {"e_caty", rec.e_caty},
              {"oracle", rec.oracle},
              {"predicted", rec.predicted.value ? json(*rec.predicted.value) : json(nullptr)},
              {"source", to_string(rec.predicted.source)},
              {"match", std::move(match)}};
}

}  // namespace takeaway
