#include "takeaway/structure.hpp"

#include <bit>
#include <set>

#include "takeaway/error.hpp"

namespace takeaway {

bool StructureReport::is_mixed_shape() const noexcept {
  switch (group) {
    case Group::I:
    case Group::II:
    case Group::III:
    case Group::IV:
    case Group::V:
    case Group::BC:
      return true;
    default:
      return false;
  }
}

std::size_t StructureReport::cat_x_size() const noexcept {
  return static_cast<std::size_t>(std::popcount(cat_x_vertices));
}

StructureReport classify(const Position& p) {
  StructureReport r;
  r.vertex_count = p.vertex_count();
  r.edge_count = p.edge_count();

  auto violate = [&](Violation kind, std::string detail) {
    r.violations.push_back({kind, std::move(detail)});
  };

  VertexMask covered = 0;
  std::vector<Hyperedge> even_edges;
  for (const Hyperedge& e : p.edges()) {
    covered |= e.mask();
    if (e.size() % 2 == 0) {
      even_edges.push_back(e);
    } else if (e.size() == 3) {
      r.cat_y_edges.push_back(e);
      r.cat_y_vertices |= e.mask();
    } else {
      violate(Violation::EdgeOutsideCategories,
              "edge of size " + std::to_string(e.size()) + " is neither even nor of size 3");
    }
  }
  for (VertexId v : p.vertices()) r.cat_y_degree[v] = 0;
  for (const Hyperedge& e : r.cat_y_edges) {
    for (VertexId v : e.members()) ++r.cat_y_degree[v];
  }

  if (p.edge_count() == 0) violate(Violation::NoEdges, "position has no hyperedges");
  for (VertexId v : p.vertices()) {
    if (((covered >> v.value) & 1U) == 0) {
      violate(Violation::UncoveredVertex, "vertex " + p.name(v) + " lies in no hyperedge");
    }
  }
  if (even_edges.size() > 1) {
    violate(Violation::MultipleEvenEdges,
            std::to_string(even_edges.size()) + " even-sized edges, expected exactly one");
  } else if (even_edges.size() == 1) {
    r.cat_x_edge = even_edges.front();
    r.cat_x_vertices = even_edges.front().mask();
  }

  if (r.cat_x_edge && !r.cat_y_edges.empty()) {
    std::set<VertexId> outside;
    for (const Hyperedge& e : r.cat_y_edges) {
      const VertexMask inside = e.mask() & r.cat_x_vertices;
      if (std::popcount(inside) != 2) {
        violate(Violation::CatYEdgeOverlap,
                "3-edge has " + std::to_string(std::popcount(inside)) +
                    " members in the CatX edge, expected 2");
        continue;
      }
      const VertexMask rest = e.mask() & ~r.cat_x_vertices;
      outside.insert(VertexId{static_cast<std::uint8_t>(std::countr_zero(rest))});
    }
    if (outside.size() == 1) {
      r.special_vertex = *outside.begin();
    } else if (outside.size() > 1) {
      violate(Violation::SpecialVertexNotShared,
              std::to_string(outside.size()) + " distinct non-CatX vertices across 3-edges");
    }
    for (VertexId v : r.cat_x_edge->members()) {
      const std::size_t d = r.cat_y_degree[v];
      if (d > 2) {
        violate(Violation::CatXDegreeAboveTwo,
                "CatX vertex " + p.name(v) + " lies in " + std::to_string(d) + " 3-edges");
        continue;
      }
      r.subcategory[v] = d == 0 ? Subcategory::C : d == 1 ? Subcategory::A : Subcategory::B;
    }
  }

  if (!r.violations.empty()) {
    r.group = Group::NonConforming;
    return r;
  }
  if (r.cat_y_edges.empty()) {
    // A single even edge covering everything; subcategories do not apply.
    r.group = Group::PriorEvenOnly;
    return r;
  }
  if (!r.cat_x_edge) {
    r.group = Group::PriorOddOnly;
    return r;
  }

  bool has_a = false, has_b = false, has_c = false;
  for (const auto& [v, s] : r.subcategory) {
    has_a |= s == Subcategory::A;
    has_b |= s == Subcategory::B;
    has_c |= s == Subcategory::C;
  }
  if (has_a) {
    r.group = has_b ? (has_c ? Group::V : Group::III) : (has_c ? Group::IV : Group::I);
  } else if (has_b) {
    r.group = has_c ? Group::BC : Group::II;
  } else {
    // Each 3-edge puts two CatX vertices into A or B.
    throw Error(ErrorCode::InternalInconsistency, "conforming instance with only subcategory C");
  }
  return r;
}

std::vector<LemmaCheck> check_lemmas(const StructureReport& r) {
  if (!r.is_mixed_shape()) {
    throw Error(ErrorCode::PreconditionViolated,
                "lemma checks need a conforming mixed instance, got group " +
                    std::string(to_string(r.group)));
  }
  const std::size_t ex = r.cat_x_size();
  const std::size_t ey = r.cat_y_edge_count();
  const std::string counts =
      "|V(CatX)|=" + std::to_string(ex) + ", |E(CatY)|=" + std::to_string(ey);

  bool all_c = true;
  for (const auto& [v, s] : r.subcategory) all_c &= s == Subcategory::C;

  std::vector<LemmaCheck> out;
  out.push_back({LemmaId::NoAllCShape, true, !all_c,
                 all_c ? "every CatX vertex is in C" : "some CatX vertex is in A or B"});

  const bool all_b = r.group == Group::II;
  out.push_back({LemmaId::AllBCatYEqualsCatX, all_b, !all_b || ey == ex, counts});
  out.push_back({LemmaId::AllBCatYAtLeastFour, all_b, !all_b || ey >= 4, counts});

  const bool bc = r.group == Group::BC;
  out.push_back({LemmaId::NoBCOnlyShape, true, !bc,
                 bc ? "instance has only B and C vertices: " + counts
                    : "instance has an A vertex or no C vertex"});

  const bool ab = r.group == Group::III;
  out.push_back({LemmaId::ABCatYAtLeastThree, ab, !ab || ey >= 3, counts});
  return out;
}

std::string_view to_string(Subcategory s) noexcept {
  switch (s) {
    case Subcategory::A: return "A";
    case Subcategory::B: return "B";
    case Subcategory::C: return "C";
  }
  return "?";
}

std::string_view to_string(Group g) noexcept {
  switch (g) {
    case Group::I: return "I";
    case Group::II: return "II";
    case Group::III: return "III";
    case Group::IV: return "IV";
    case Group::V: return "V";
    case Group::BC: return "BC";
    case Group::PriorEvenOnly: return "PriorEvenOnly";
    case Group::PriorOddOnly: return "PriorOddOnly";
    case Group::NonConforming: return "NonConforming";
  }
  return "?";
}

std::string_view to_string(Violation v) noexcept {
  switch (v) {
    case Violation::NoEdges: return "no_edges";
    case Violation::UncoveredVertex: return "uncovered_vertex";
    case Violation::EdgeOutsideCategories: return "edge_outside_categories";
    case Violation::MultipleEvenEdges: return "multiple_even_edges";
    case Violation::CatYEdgeOverlap: return "caty_edge_overlap";
    case Violation::SpecialVertexNotShared: return "special_vertex_not_shared";
    case Violation::CatXDegreeAboveTwo: return "catx_degree_above_two";
  }
  return "?";
}

std::string_view to_string(LemmaId id) noexcept {
  switch (id) {
    case LemmaId::NoAllCShape: return "no_all_c_shape";
    case LemmaId::AllBCatYEqualsCatX: return "all_b_caty_equals_catx";
    case LemmaId::AllBCatYAtLeastFour: return "all_b_caty_at_least_4";
    case LemmaId::NoBCOnlyShape: return "no_bc_only_shape";
    case LemmaId::ABCatYAtLeastThree: return "ab_caty_at_least_3";
  }
  return "?";
}

}  // namespace takeaway
