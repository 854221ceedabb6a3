#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "takeaway/position.hpp"

namespace takeaway {

/// CatX vertices by the number of 3-edges they lie in: A = 1, B = 2, C = 0.
enum class Subcategory { A, B, C };

/// Instance shapes. I..V and BC are the conforming mixed shapes, named by
/// the subcategories present: I {A}, II {B}, III {A,B}, IV {A,C},
/// V {A,B,C}, BC {B,C}.
enum class Group { I, II, III, IV, V, BC, PriorEvenOnly, PriorOddOnly, NonConforming };

enum class Violation {
  NoEdges,                   // nothing to classify
  UncoveredVertex,           // a vertex lies in no hyperedge
  EdgeOutsideCategories,     // edge is neither even-sized nor a 3-edge
  MultipleEvenEdges,         // more than one even-sized edge
  CatYEdgeOverlap,           // a 3-edge does not have exactly 2 members in the CatX edge
  SpecialVertexNotShared,    // 3-edges disagree on their non-CatX member
  CatXDegreeAboveTwo,        // a CatX vertex lies in more than two 3-edges
};

struct ViolationRecord {
  Violation kind;
  std::string detail;
};

struct StructureReport {
  std::optional<Hyperedge> cat_x_edge;
  VertexMask cat_x_vertices = 0;
  std::vector<Hyperedge> cat_y_edges;
  VertexMask cat_y_vertices = 0;
  std::optional<VertexId> special_vertex;
  std::map<VertexId, Subcategory> subcategory;    // CatX vertices of degree <= 2
  std::map<VertexId, std::size_t> cat_y_degree;   // every vertex of the position
  Group group = Group::NonConforming;
  std::vector<ViolationRecord> violations;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;

  bool conforming() const noexcept { return violations.empty(); }
  bool is_mixed_shape() const noexcept;  // I..V or BC
  std::size_t cat_x_size() const noexcept;
  std::size_t cat_y_edge_count() const noexcept { return cat_y_edges.size(); }
};

/// Never throws on non-conforming input: failures are listed in
/// `violations` and the group is NonConforming.
StructureReport classify(const Position& p);

/// Lemma-style structural claims over the conforming mixed shapes.
enum class LemmaId {
  NoAllCShape,          // no instance has every CatX vertex in C
  AllBCatYEqualsCatX,   // all-B: |E(CatY)| = |V(CatX)|
  AllBCatYAtLeastFour,  // all-B: |E(CatY)| >= 4
  NoBCOnlyShape,        // no instance has only B and C vertices
  ABCatYAtLeastThree,   // A+B only: |E(CatY)| >= 3
};

struct LemmaCheck {
  LemmaId id;
  bool applies = false;  // the claim's hypothesis matches this instance
  bool holds = true;     // vacuously true when it does not apply
  std::string witness;
};

/// Throws PreconditionViolated unless the report is a mixed shape.
std::vector<LemmaCheck> check_lemmas(const StructureReport& r);

std::string_view to_string(Subcategory s) noexcept;
std::string_view to_string(Group g) noexcept;
std::string_view to_string(Violation v) noexcept;
std::string_view to_string(LemmaId id) noexcept;

}  // namespace takeaway
