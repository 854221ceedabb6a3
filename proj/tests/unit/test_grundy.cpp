#include "doctest.h"

#include <random>
#include <thread>

#include "takeaway/enumerator.hpp"
#include "takeaway/error.hpp"
#include "takeaway/grundy.hpp"
#include "test_support.hpp"

using namespace takeaway;
using takeaway::testing::named;

namespace {

std::vector<unsigned> u(std::initializer_list<unsigned> xs) { return xs; }

Position isolated(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  return named(names, {});
}

}  // namespace

TEST_CASE("mex") {
  CHECK(mex(u({2, 0, 2, 3})) == 1);
  CHECK(mex(u({2, 3, 0, 1, 1})) == 4);
  CHECK(mex(u({})) == 0);
  CHECK(mex(u({0, 1, 2})) == 3);
  CHECK(mex(u({2, 3, 1, 1})) == 0);
  CHECK(mex(u({2, 0, 1, 1})) == 3);
}

TEST_CASE("grundy anchors") {
  GrundySolver solver;
  CHECK(solver.value(takeaway::testing::smallest_instance()) == 1);
  CHECK(solver.value(Position{}) == 0);
  CHECK(solver.value(named({"a", "b", "c"}, {{"a", "b", "c"}})) == 2);
  CHECK(solver.value(named({"a", "b"}, {{"a", "b"}})) == 2);
  for (std::size_t k = 0; k <= 12; ++k) CHECK(solver.value(isolated(k)) == k % 2);
}

TEST_CASE("solve reports option values in legal-move order") {
  GrundySolver solver;
  const Position p = takeaway::testing::smallest_instance();
  const GrundyResult g = solver.solve(p);
  CHECK(g.value == 1);
  REQUIRE(g.options.size() == 5);
  // S, A, B, {S,A,B}, {A,B}
  const std::vector<int> expected{2, 0, 0, 3, 2};
  for (std::size_t i = 0; i < 5; ++i) CHECK(g.options[i].value == expected[i]);
  REQUIRE(g.winning_moves.size() == 2);
  CHECK(describe(p, g.winning_moves[0]) == "remove vertex A");
  CHECK(describe(p, g.winning_moves[1]) == "remove vertex B");

  const GrundyResult terminal = solver.solve(Position{});
  CHECK(terminal.value == 0);
  CHECK(terminal.options.empty());
  CHECK(terminal.winning_moves.empty());

  const Position single = named({"a"}, {});
  const auto wins = solver.winning_moves(single);
  REQUIRE(wins.size() == 1);
  CHECK(describe(single, wins[0]) == "remove vertex a");
}

TEST_CASE("engine agrees with an independent brute-force oracle") {
  std::mt19937 rng(2024);
  GrundySolver solver;
  takeaway::testing::BruteForceGrundy oracle;
  for (int trial = 0; trial < 150; ++trial) {
    const Position p = takeaway::testing::random_position(rng, 6, 6);
    CHECK(static_cast<int>(solver.value(p)) == oracle.value(p));
  }
}

TEST_CASE("result invariants") {
  std::mt19937 rng(5);
  GrundySolver solver;
  for (int trial = 0; trial < 100; ++trial) {
    const Position p = takeaway::testing::random_position(rng, 6, 6);
    const GrundyResult g = solver.solve(p);
    std::vector<unsigned> values;
    for (const auto& o : g.options) values.push_back(o.value);
    CHECK(g.value == mex(values));
    CHECK((g.value == 0) == g.winning_moves.empty());
    CHECK(g.value <= g.options.size());
  }
}

TEST_CASE("memoization and iso reduction are transparent for |V| <= 7") {
  std::mt19937 rng(77);
  SolveOptions plain;
  plain.memoize = false;
  SolveOptions iso;
  iso.iso_reduce = true;
  GrundySolver memo_solver;
  GrundySolver plain_solver(plain);
  GrundySolver iso_solver(iso);
  for (int trial = 0; trial < 60; ++trial) {
    const Position p = takeaway::testing::random_position(rng, 7, 4);
    const Grundy g = memo_solver.value(p);
    CHECK(plain_solver.value(p) == g);
    CHECK(iso_solver.value(p) == g);
    CHECK(memo_solver.is_zero(p) == (g == 0));
    CHECK(plain_solver.is_zero(p) == (g == 0));
  }
  CHECK(plain_solver.table().size() == 0);
  CHECK(memo_solver.table().size() > 0);
}

TEST_CASE("size bound") {
  GrundySolver solver;
  CHECK_THROWS_AS(solver.value(isolated(17)), Error);
  try {
    solver.solve(isolated(17));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeBoundExceeded);
  }
  SolveOptions wide;
  wide.max_vertices = 20;
  CHECK(GrundySolver(wide).value(isolated(17)) == 1);
}

TEST_CASE("the longest play line on 16 vertices and 48 edges has 64 moves") {
  // 64 moves along the longest line: 16 vertices and 48 edges.
  std::vector<std::string> names;
  for (int i = 0; i < 16; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::vector<std::string>> edges;
  for (int i = 0; i < 16 && edges.size() < 48; ++i) {
    for (int j = i + 1; j < 16 && edges.size() < 48; ++j) {
      if (j - i <= 3) edges.push_back({names[i], names[j]});
    }
  }
  REQUIRE(edges.size() == 42);
  for (int i = 0; i + 4 < 16 && edges.size() < 48; ++i) edges.push_back({names[i], names[i + 4]});
  REQUIRE(edges.size() == 48);
  const Position p = named(names, edges);
  Position q = p;
  std::size_t depth = 0;
  while (!q.is_terminal()) {
    const auto moves = legal_moves(q);
    q = q.after(moves.back());
    ++depth;
  }
  CHECK(depth == 64);
}

TEST_CASE("shared table across threads gives the single-threaded values") {
  const auto instances = enumerate_instances({2, 2, false});
  std::vector<Grundy> expected;
  {
    GrundySolver solver;
    for (const auto& p : instances) expected.push_back(solver.value(p));
  }
  auto table = std::make_shared<TranspositionTable>();
  std::vector<Grundy> got(instances.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        GrundySolver solver(table);
        for (std::size_t i = t; i < instances.size(); i += 4) got[i] = solver.value(instances[i]);
      });
    }
  }
  CHECK(got == expected);
  const auto st = table->stats();
  CHECK(st.entries == table->size());
  CHECK(st.hits + st.misses > 0);
}

TEST_CASE("transposition table rejects conflicting rewrites") {
  TranspositionTable t;
  t.insert("k", 3);
  CHECK_NOTHROW(t.insert("k", 3));
  CHECK_THROWS_AS(t.insert("k", 4), Error);
  CHECK(t.find("k") == Grundy{3});
  CHECK_FALSE(t.find("missing").has_value());
  t.clear();
  CHECK(t.size() == 0);
}

TEST_CASE("engine move policy") {
  GrundySolver solver;
  const Position p = takeaway::testing::smallest_instance();
  CHECK(describe(p, engine_move(solver, p)) == "remove vertex A");
  // Losing position {S,B}: no winning move, fall back to the first legal move.
  const Position lost = p.after(engine_move(solver, p));
  CHECK(solver.value(lost) == 0);
  CHECK(describe(lost, engine_move(solver, lost)) == "remove vertex S");
  CHECK_THROWS_AS(engine_move(solver, Position{}), Error);
}
