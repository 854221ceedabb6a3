#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace takeaway {

/// Vertex sets are bit masks; ids therefore live in [0, 64).
using VertexMask = std::uint64_t;
inline constexpr std::size_t kVertexIdLimit = 64;

struct VertexId {
  std::uint8_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct VertexDecl {
  VertexId id;
  std::optional<std::string> name;
};

/// A set of at least two vertices. Ordering is lexicographic over the
/// ascending member sequence, so {0,1,2} < {0,2} < {1,2}.
class Hyperedge {
 public:
  /// Throws EdgeTooSmall for fewer than two distinct members and
  /// DuplicateVertexId when a member is repeated.
  static Hyperedge from_members(std::span<const VertexId> members);
  static Hyperedge from_mask(VertexMask mask);

  VertexMask mask() const noexcept { return mask_; }
  std::size_t size() const noexcept;
  bool contains(VertexId v) const noexcept { return (mask_ >> v.value) & 1U; }
  std::vector<VertexId> members() const;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
  friend std::strong_ordering operator<=>(const Hyperedge& a, const Hyperedge& b) noexcept;

 private:
  explicit Hyperedge(VertexMask mask) : mask_(mask) {}
  VertexMask mask_ = 0;
};

struct RemoveVertex {
  VertexId vertex;
  friend bool operator==(const RemoveVertex&, const RemoveVertex&) = default;
};

struct RemoveEdge {
  Hyperedge edge;
  friend bool operator==(const RemoveEdge&, const RemoveEdge&) = default;
};

using Move = std::variant<RemoveVertex, RemoveEdge>;

/// Immutable game state: a vertex set and a set of hyperedges over it.
///
/// Display names are shared between a position and everything derived from
/// it, so positions reached during play still print with the names of the
/// instance they came from. Vertices declared without a name display as
/// "v<id>".
class Position {
 public:
  /// The terminal position.
  Position() = default;

  /// Validates and builds a position. Duplicate edges are rejected, never
  /// merged. Edge members are given by vertex id.
  static Position make(std::span<const VertexDecl> vertices,
                       std::span<const std::vector<VertexId>> edges);

  VertexMask vertex_mask() const noexcept { return vertices_; }
  std::vector<VertexId> vertices() const;
  std::span<const Hyperedge> edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept;
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool is_terminal() const noexcept { return vertices_ == 0; }

  bool has_vertex(VertexId v) const noexcept { return (vertices_ >> v.value) & 1U; }
  bool has_edge(const Hyperedge& e) const noexcept;

  std::string name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

  /// Throws IllegalMove when the vertex or edge is absent.
  Position after(const Move& move) const;

  /// Applies a vertex relabeling: vertex v becomes mapping[v]. The mapping
  /// must be injective on the present vertices. Names travel with vertices.
  Position relabeled(std::span<const VertexId> mapping) const;

  /// Structural equality plus equality of the displayed names.
  friend bool operator==(const Position& a, const Position& b);

 private:
  using NameTable = std::vector<std::optional<std::string>>;

  Position(VertexMask vertices, std::vector<Hyperedge> edges,
           std::shared_ptr<const NameTable> names)
      : vertices_(vertices), edges_(std::move(edges)), names_(std::move(names)) {}

  VertexMask vertices_ = 0;
  std::vector<Hyperedge> edges_;  // sorted, distinct
  std::shared_ptr<const NameTable> names_;
};

/// Vertex removals in ascending id order, then edge removals in edge order.
std::vector<Move> legal_moves(const Position& p);

inline Position apply_move(const Position& p, const Move& m) { return p.after(m); }

/// Labeled encoding used as the default memo key: 8 little-endian bytes of
/// the vertex mask followed by 8 bytes per edge in edge order. The terminal
/// position encodes as eight zero bytes.
std::string canonical_key(const Position& p);

/// Human-readable move, e.g. "remove vertex A" or "remove edge {A,B}".
std::string describe(const Position& p, const Move& m);

}  // namespace takeaway
