#include "takeaway/position.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "takeaway/error.hpp"

namespace takeaway {

namespace {

std::string default_name(VertexId v) { return "v" + std::to_string(v.value); }

void append_u64(std::string& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((x >> (8 * i)) & 0xFFU));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Hyperedge

Hyperedge Hyperedge::from_members(std::span<const VertexId> members) {
  VertexMask mask = 0;
  for (VertexId v : members) {
    if (v.value >= kVertexIdLimit) {
      throw Error(ErrorCode::TooManyVertices,
                  "vertex id " + std::to_string(v.value) + " exceeds the id limit");
    }
    const VertexMask bit = VertexMask{1} << v.value;
    if (mask & bit) {
      if (std::popcount(mask) < 2 && members.size() <= 2) {
        throw Error(ErrorCode::EdgeTooSmall, "hyperedge needs at least 2 distinct vertices");
      }
      throw Error(ErrorCode::DuplicateVertexId,
                  "vertex " + std::to_string(v.value) + " listed twice in one hyperedge");
    }
    mask |= bit;
  }
  if (std::popcount(mask) < 2) {
    throw Error(ErrorCode::EdgeTooSmall, "hyperedge needs at least 2 distinct vertices");
  }
  return Hyperedge(mask);
}

Hyperedge Hyperedge::from_mask(VertexMask mask) {
  if (std::popcount(mask) < 2) {
    throw Error(ErrorCode::EdgeTooSmall, "hyperedge needs at least 2 distinct vertices");
  }
  return Hyperedge(mask);
}

std::size_t Hyperedge::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<VertexId> Hyperedge::members() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for (VertexMask m = mask_; m != 0; m &= m - 1) {
    out.push_back(VertexId{static_cast<std::uint8_t>(std::countr_zero(m))});
  }
  return out;
}

std::strong_ordering operator<=>(const Hyperedge& a, const Hyperedge& b) noexcept {
  VertexMask x = a.mask_;
  VertexMask y = b.mask_;
  while (x != 0 && y != 0) {
    const int lx = std::countr_zero(x);
    const int ly = std::countr_zero(y);
    if (lx != ly) return lx <=> ly;
    x &= x - 1;
    y &= y - 1;
  }
  // A proper prefix sorts first.
  return (x != 0) <=> (y != 0);
}

// ---------------------------------------------------------------------------
// Position

Position Position::make(std::span<const VertexDecl> vertices,
                        std::span<const std::vector<VertexId>> edges) {
  VertexMask mask = 0;
  auto names = std::make_shared<NameTable>(kVertexIdLimit);
  for (const VertexDecl& decl : vertices) {
    if (decl.id.value >= kVertexIdLimit) {
      throw Error(ErrorCode::TooManyVertices,
                  "vertex id " + std::to_string(decl.id.value) + " exceeds the id limit");
    }
    const VertexMask bit = VertexMask{1} << decl.id.value;
    if (mask & bit) {
      throw Error(ErrorCode::DuplicateVertexId,
                  "vertex id " + std::to_string(decl.id.value) + " declared twice");
    }
    mask |= bit;
    (*names)[decl.id.value] = decl.name;
  }

  std::set<std::string, std::less<>> seen_names;
  for (const VertexDecl& decl : vertices) {
    std::string effective = decl.name ? *decl.name : default_name(decl.id);
    if (!seen_names.insert(effective).second) {
      throw Error(ErrorCode::DuplicateVertexName, "vertex name '" + effective + "' used twice");
    }
  }

  std::vector<Hyperedge> built;
  built.reserve(edges.size());
  for (const auto& members : edges) {
    Hyperedge e = Hyperedge::from_members(members);
    if ((e.mask() & ~mask) != 0) {
      throw Error(ErrorCode::EdgeNotSubsetOfVertices,
                  "hyperedge references a vertex that is not in the position");
    }
    built.push_back(e);
  }
  std::sort(built.begin(), built.end());
  if (std::adjacent_find(built.begin(), built.end()) != built.end()) {
    throw Error(ErrorCode::DuplicateEdge, "hyperedge listed twice");
  }
  return Position(mask, std::move(built), std::move(names));
}

std::vector<VertexId> Position::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count());
  for (VertexMask m = vertices_; m != 0; m &= m - 1) {
    out.push_back(VertexId{static_cast<std::uint8_t>(std::countr_zero(m))});
  }
  return out;
}

std::size_t Position::vertex_count() const noexcept {
  return static_cast<std::size_t>(std::popcount(vertices_));
}

bool Position::has_edge(const Hyperedge& e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::string Position::name(VertexId v) const {
  if (names_ && v.value < names_->size() && (*names_)[v.value]) {
    return *(*names_)[v.value];
  }
  return default_name(v);
}

std::optional<VertexId> Position::find_vertex(std::string_view wanted) const {
  for (VertexId v : vertices()) {
    if (name(v) == wanted) return v;
  }
  return std::nullopt;
}

Position Position::after(const Move& move) const {
  if (const auto* rv = std::get_if<RemoveVertex>(&move)) {
    if (!has_vertex(rv->vertex)) {
      throw Error(ErrorCode::IllegalMove,
                  "vertex " + name(rv->vertex) + " is not in the position");
    }
    const VertexMask bit = VertexMask{1} << rv->vertex.value;
    std::vector<Hyperedge> kept;
    kept.reserve(edges_.size());
    for (const Hyperedge& e : edges_) {
      if ((e.mask() & bit) == 0) kept.push_back(e);
    }
    return Position(vertices_ & ~bit, std::move(kept), names_);
  }
  const auto& re = std::get<RemoveEdge>(move);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), re.edge);
  if (it == edges_.end() || *it != re.edge) {
    throw Error(ErrorCode::IllegalMove, "hyperedge is not in the position");
  }
  std::vector<Hyperedge> kept;
  kept.reserve(edges_.size() - 1);
  kept.insert(kept.end(), edges_.begin(), it);
  kept.insert(kept.end(), std::next(it), edges_.end());
  return Position(vertices_, std::move(kept), names_);
}

Position Position::relabeled(std::span<const VertexId> mapping) const {
  auto names = std::make_shared<NameTable>(kVertexIdLimit);
  VertexMask mask = 0;
  auto map_mask = [&](VertexMask in) {
    VertexMask out = 0;
    for (VertexMask m = in; m != 0; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      if (v >= mapping.size() || mapping[v].value >= kVertexIdLimit) {
        throw Error(ErrorCode::PreconditionViolated, "relabeling does not cover every vertex");
      }
      out |= VertexMask{1} << mapping[v].value;
    }
    return out;
  };
  for (VertexId v : vertices()) {
    const VertexId target = mapping.size() > v.value ? mapping[v.value] : VertexId{};
    mask |= map_mask(VertexMask{1} << v.value);
    if (names_ && (*names_)[v.value]) (*names)[target.value] = (*names_)[v.value];
  }
  if (std::popcount(mask) != std::popcount(vertices_)) {
    throw Error(ErrorCode::PreconditionViolated, "relabeling is not injective");
  }
  std::vector<Hyperedge> edges;
  edges.reserve(edges_.size());
  for (const Hyperedge& e : edges_) edges.push_back(Hyperedge::from_mask(map_mask(e.mask())));
  std::sort(edges.begin(), edges.end());
  return Position(mask, std::move(edges), std::move(names));
}

bool operator==(const Position& a, const Position& b) {
  if (a.vertices_ != b.vertices_ || a.edges_ != b.edges_) return false;
  for (VertexId v : a.vertices()) {
    if (a.name(v) != b.name(v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Moves and keys

std::vector<Move> legal_moves(const Position& p) {
  std::vector<Move> moves;
  moves.reserve(p.vertex_count() + p.edge_count());
  for (VertexId v : p.vertices()) moves.emplace_back(RemoveVertex{v});
  for (const Hyperedge& e : p.edges()) moves.emplace_back(RemoveEdge{e});
  return moves;
}

std::string canonical_key(const Position& p) {
  std::string key;
  key.reserve(8 * (1 + p.edge_count()));
  append_u64(key, p.vertex_mask());
  for (const Hyperedge& e : p.edges()) append_u64(key, e.mask());
  return key;
}

std::string describe(const Position& p, const Move& m) {
  if (const auto* rv = std::get_if<RemoveVertex>(&m)) {
    return "remove vertex " + p.name(rv->vertex);
  }
  std::string out = "remove edge {";
  bool first = true;
  for (VertexId v : std::get<RemoveEdge>(m).edge.members()) {
    if (!first) out += ',';
    out += p.name(v);
    first = false;
  }
  return out + "}";
}

}  // namespace takeaway
