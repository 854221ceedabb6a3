#include "doctest.h"

#include <bit>

#include "takeaway/enumerator.hpp"
#include "takeaway/error.hpp"
#include "takeaway/instance_io.hpp"
#include "takeaway/structure.hpp"
#include "test_support.hpp"

using namespace takeaway;
using takeaway::testing::fixture;
using takeaway::testing::named;

namespace {

Subcategory sub(const Position& p, const StructureReport& r, const std::string& name) {
  return r.subcategory.at(*p.find_vertex(name));
}

bool has_violation(const StructureReport& r, Violation v) {
  for (const auto& rec : r.violations) {
    if (rec.kind == v) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("path of three 3-edges on six CatX vertices is group V") {
  const Position p = load_instance(fixture("m3_path.json"));
  const StructureReport r = classify(p);
  CHECK(r.conforming());
  CHECK(r.group == Group::V);
  CHECK(r.special_vertex == p.find_vertex("S"));
  for (const char* a : {"A", "D"}) CHECK(sub(p, r, a) == Subcategory::A);
  for (const char* b : {"B", "C"}) CHECK(sub(p, r, b) == Subcategory::B);
  for (const char* c : {"E", "F"}) CHECK(sub(p, r, c) == Subcategory::C);
  CHECK(r.cat_x_size() == 6);
  CHECK(r.cat_y_edge_count() == 3);
}

TEST_CASE("reference fixtures classify into their groups") {
  CHECK(classify(load_instance(fixture("m1_triangle.json"))).group == Group::I);
  CHECK(classify(load_instance(fixture("m2_path.json"))).group == Group::V);
  CHECK(classify(load_instance(fixture("m4_matching.json"))).group == Group::I);
}

TEST_CASE("the 4-cycle instance conforms with only B and C vertices") {
  const Position p = takeaway::testing::bc_four_cycle();
  const StructureReport r = classify(p);
  CHECK(r.conforming());
  CHECK(r.group == Group::BC);
  for (const char* b : {"v1", "v2", "v3", "v4"}) {
    CHECK(sub(p, r, b) == Subcategory::B);
    CHECK(r.cat_y_degree.at(*p.find_vertex(b)) == 2);
  }
  for (const char* c : {"v5", "v6"}) CHECK(sub(p, r, c) == Subcategory::C);
}

TEST_CASE("prior-work shapes") {
  const StructureReport even = classify(named({"A", "B", "C", "D"}, {{"A", "B", "C", "D"}}));
  CHECK(even.group == Group::PriorEvenOnly);
  CHECK(even.subcategory.empty());
  CHECK_FALSE(even.special_vertex.has_value());

  const StructureReport odd =
      classify(named({"a", "b", "c", "d", "e"}, {{"a", "b", "c"}, {"c", "d", "e"}}));
  CHECK(odd.group == Group::PriorOddOnly);
}

TEST_CASE("non-conforming instances list every failed requirement") {
  SUBCASE("two even edges") {
    const auto r = classify(load_instance(fixture("two_even_edges.json")));
    CHECK(r.group == Group::NonConforming);
    CHECK(has_violation(r, Violation::MultipleEvenEdges));
  }
  SUBCASE("uncovered vertex") {
    const auto r = classify(named({"A", "B", "C"}, {{"A", "B"}}));
    CHECK(r.group == Group::NonConforming);
    CHECK(has_violation(r, Violation::UncoveredVertex));
  }
  SUBCASE("edge of size 5") {
    const auto r = classify(named({"a", "b", "c", "d", "e"}, {{"a", "b", "c", "d", "e"}}));
    CHECK(has_violation(r, Violation::EdgeOutsideCategories));
  }
  SUBCASE("3-edge inside the CatX edge") {
    const auto r = classify(named({"A", "B", "C", "D"}, {{"A", "B", "C", "D"}, {"A", "B", "C"}}));
    CHECK(has_violation(r, Violation::CatYEdgeOverlap));
  }
  SUBCASE("two special vertex candidates") {
    const auto r = classify(
        named({"S", "T", "A", "B"}, {{"A", "B"}, {"S", "A", "B"}, {"T", "A", "B"}}));
    CHECK(has_violation(r, Violation::SpecialVertexNotShared));
  }
  SUBCASE("CatX vertex in three 3-edges") {
    const auto r = classify(named({"S", "A", "B", "C", "D"},
                                  {{"A", "B", "C", "D"}, {"S", "A", "B"}, {"S", "A", "C"},
                                   {"S", "A", "D"}}));
    CHECK(has_violation(r, Violation::CatXDegreeAboveTwo));
  }
  SUBCASE("empty position") {
    const auto r = classify(Position{});
    CHECK(r.group == Group::NonConforming);
    CHECK(has_violation(r, Violation::NoEdges));
  }
}

TEST_CASE("classifier invariants over all instances up to m = 3") {
  const auto instances = enumerate_instances({1, 3, false});
  for (const Position& p : instances) {
    const StructureReport r = classify(p);
    REQUIRE(r.conforming());
    REQUIRE(r.is_mixed_shape());

    std::size_t degree_sum = 0;
    VertexMask a_or_b = 0;
    for (VertexId v : r.cat_x_edge->members()) {
      const std::size_t d = r.cat_y_degree.at(v);
      CHECK(d <= 2);
      degree_sum += d;
      const Subcategory s = r.subcategory.at(v);
      CHECK((s == Subcategory::A) == (d == 1));
      CHECK((s == Subcategory::B) == (d == 2));
      CHECK((s == Subcategory::C) == (d == 0));
      if (s != Subcategory::C) a_or_b |= VertexMask{1} << v.value;
    }
    CHECK(r.subcategory.size() == r.cat_x_size());
    CHECK(degree_sum == 2 * r.cat_y_edge_count());
    CHECK(r.cat_y_vertices == (a_or_b | (VertexMask{1} << r.special_vertex->value)));
    if (r.group == Group::II) {
      CHECK(r.cat_y_edge_count() == r.cat_x_size());
      CHECK(r.cat_y_edge_count() >= 4);
      CHECK(r.cat_y_edge_count() % 2 == 0);
    }
    if (r.group == Group::III) CHECK(r.cat_y_edge_count() >= 3);
  }
}

TEST_CASE("classify is label-invariant") {
  const Position p = load_instance(fixture("m3_path.json"));
  const StructureReport r = classify(p);
  // Reverse the ids: S becomes 6, A becomes 5, ...
  std::vector<VertexId> mapping(7);
  for (std::uint8_t i = 0; i < 7; ++i) mapping[i] = VertexId{static_cast<std::uint8_t>(6 - i)};
  const Position q = p.relabeled(mapping);
  const StructureReport rq = classify(q);
  CHECK(rq.group == r.group);
  CHECK(rq.special_vertex == mapping[r.special_vertex->value]);
  for (const auto& [v, s] : r.subcategory) CHECK(rq.subcategory.at(mapping[v.value]) == s);
}

TEST_CASE("check_lemmas") {
  SUBCASE("group II instance satisfies the all-B counts") {
    // Degree-2-regular pair sets on 4 labeled vertices, found by brute force
    // over all 2^6 subsets of the 6 pairs.
    const std::vector<std::pair<std::size_t, std::size_t>> pairs{{1, 2}, {1, 3}, {1, 4},
                                                                  {2, 3}, {2, 4}, {3, 4}};
    std::size_t regular = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
      int deg[5] = {0, 0, 0, 0, 0};
      std::vector<std::pair<std::size_t, std::size_t>> chosen;
      for (unsigned k = 0; k < 6; ++k) {
        if ((mask >> k) & 1U) {
          ++deg[pairs[k].first];
          ++deg[pairs[k].second];
          chosen.push_back(pairs[k]);
        }
      }
      if (deg[1] != 2 || deg[2] != 2 || deg[3] != 2 || deg[4] != 2) continue;
      ++regular;
      CHECK(std::popcount(mask) == 4);
      const auto r = classify(make_instance(2, chosen));
      REQUIRE(r.group == Group::II);
      for (const auto& c : check_lemmas(r)) CHECK(c.holds);
    }
    CHECK(regular == 3);
  }
  SUBCASE("the BC instance is a counterexample shape") {
    const auto checks = check_lemmas(classify(takeaway::testing::bc_four_cycle()));
    for (const auto& c : checks) {
      if (c.id == LemmaId::NoBCOnlyShape) {
        CHECK_FALSE(c.holds);
      } else {
        CHECK(c.holds);
      }
    }
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS(check_lemmas(classify(named({"A", "B"}, {{"A", "B"}}))), Error);
  }
}
