#include "takeaway/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "takeaway/error.hpp"

namespace takeaway {

using nlohmann::json;

bool is_valid_vertex_name(std::string_view name) noexcept {
  if (name.empty() || name.size() > 16) return false;
  for (char c : name) {
    if (c < 0x21 || c > 0x7E) return false;
  }
  return true;
}

Position instance_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::MalformedDocument, "instance document must be an object");
  }
  auto vit = doc.find("vertices");
  auto eit = doc.find("edges");
  if (vit == doc.end() || !vit->is_array()) {
    throw Error(ErrorCode::MalformedDocument, "field \"vertices\" must be an array");
  }
  if (eit == doc.end() || !eit->is_array()) {
    throw Error(ErrorCode::MalformedDocument, "field \"edges\" must be an array");
  }
  if (vit->size() > kVertexIdLimit) {
    throw Error(ErrorCode::TooManyVertices,
                "at most " + std::to_string(kVertexIdLimit) + " vertices are supported");
  }

  std::vector<VertexDecl> decls;
  decls.reserve(vit->size());
  for (const json& name : *vit) {
    if (!name.is_string()) {
      throw Error(ErrorCode::MalformedDocument, "vertex names must be strings");
    }
    const auto& s = name.get_ref<const std::string&>();
    if (!is_valid_vertex_name(s)) {
      throw Error(ErrorCode::MalformedDocument,
                  "vertex name '" + s + "' must be 1-16 visible characters");
    }
    decls.push_back({VertexId{static_cast<std::uint8_t>(decls.size())}, s});
  }

  auto lookup = [&](const std::string& s) {
    for (const VertexDecl& d : decls) {
      if (*d.name == s) return d.id;
    }
    throw Error(ErrorCode::UnknownVertexName, "edge references undeclared vertex '" + s + "'");
  };

  std::vector<std::vector<VertexId>> edges;
  edges.reserve(eit->size());
  for (const json& edge : *eit) {
    if (!edge.is_array()) {
      throw Error(ErrorCode::MalformedDocument, "each edge must be an array of names");
    }
    std::vector<VertexId> members;
    for (const json& name : edge) {
      if (!name.is_string()) {
        throw Error(ErrorCode::MalformedDocument, "edge members must be strings");
      }
      members.push_back(lookup(name.get<std::string>()));
    }
    edges.push_back(std::move(members));
  }
  return Position::make(decls, edges);
}

Position parse_instance(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::MalformedDocument, "instance document is not valid JSON");
  }
  return instance_from_json(doc);
}

json instance_to_json(const Position& p) {
  json vertices = json::array();
  for (VertexId v : p.vertices()) vertices.push_back(p.name(v));
  json edges = json::array();
  for (const Hyperedge& e : p.edges()) {
    json members = json::array();
    for (VertexId v : e.members()) members.push_back(p.name(v));
    edges.push_back(std::move(members));
  }
  json doc = json::object();
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc;
}

std::string serialize_instance(const Position& p) {
  // nlohmann orders object keys alphabetically; "edges" would come first.
  const json doc = instance_to_json(p);
  return std::string("{\"vertices\":") + doc["vertices"].dump() +
         ",\"edges\":" + doc["edges"].dump() + "}";
}

Position load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const std::filesystem::path& path, const Position& p) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  out << serialize_instance(p) << '\n';
  if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
}

}  // namespace takeaway
