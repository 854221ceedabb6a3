// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "takeaway/canonical.hpp"
#include "takeaway/closed_form.hpp"
#include "takeaway/enumerator.hpp"
#include "takeaway/grundy.hpp"
#include "takeaway/instance_io.hpp"
#include "takeaway/structure.hpp"
#include "test_support.hpp"

using namespace takeaway;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

std::vector<unsigned> values(std::initializer_list<unsigned> xs) { return xs; }

Position isolated(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  return testing::named(names, {});
}

std::map<std::string, Position> reachable_up_to(std::size_t max_m) {
  std::map<std::string, Position> all;
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (const Position& p : enumerate_instances({m, m, false})) all.merge(testing::reachable(p));
  }
  return all;
}

void mex_anchors(Outcome& o) {
  o.expect(mex(values({2, 0, 2, 3})) == 1, "mex{2,0,2,3}");
  o.expect(mex(values({2, 3, 0, 1, 1})) == 4, "mex{2,3,0,1,1}");
  o.expect(mex(values({})) == 0, "mex{}");
  o.expect(mex(values({0, 1, 2})) == 3, "mex{0,1,2}");
  o.expect(mex(values({2, 3, 1, 1})) == 0, "mex{2,3,1,1}");
  o.expect(mex(values({2, 0, 1, 1})) == 3, "mex{2,0,1,1}");
}

void oracle_anchors(Outcome& o) {
  GrundySolver solver;
  o.expect(solver.value(testing::smallest_instance()) == 1, "smallest instance");
  o.expect(solver.value(testing::named({"a", "b"}, {{"a", "b"}})) == 2, "single 2-edge");
  o.expect(solver.value(testing::named({"a", "b", "c"}, {{"a", "b", "c"}})) == 2,
           "single 3-edge");
  o.expect(solver.value(testing::named({"S", "a", "b"}, {{"S", "a", "b"}})) == 2,
           "{S,a,b} with one 3-edge");
  for (std::size_t k = 0; k <= 12; ++k) {
    o.expect(solver.value(isolated(k)) == k % 2, std::to_string(k) + " isolated vertices");
  }
}

void verify_m2(Outcome& o) {
  const VerificationRun run = verify({2, 2, false});
  o.expect(run.records.size() == 40, "expected 40 records");
  const auto dir = std::filesystem::temp_directory_path() / "takeaway_acceptance_m2";
  std::filesystem::remove_all(dir);
  const auto files = write_mismatch_files(run.records, dir);
  o.expect(files.size() == run.summary.mismatches, "one file per mismatch");
  for (const auto& r : run.records) {
    if (r.group == Group::BC) continue;
    o.expect(r.match == MatchStatus::Match,
             "instance " + std::to_string(r.instance_id) + " mismatch, see " + dir.string());
  }
  if (o.ok) std::filesystem::remove_all(dir);
}

void verify_m3(Outcome& o) {
  VerifyOptions opts;
  opts.threads = 4;
  const VerificationRun first = verify({3, 3, false}, opts);
  const VerificationRun second = verify({3, 3, false}, opts);
  o.expect(first.records.size() == count_instances({3, 3, false}), "one record per instance");
  for (const auto& r : first.records) {
    if (r.group == Group::BC) {
      o.expect(!r.predicted.value.has_value() && r.match == MatchStatus::NoPrediction,
               "BC record carries a prediction");
    } else {
      o.expect(r.match == MatchStatus::Match, "instance " + std::to_string(r.instance_id));
    }
  }
  o.expect(emit_report(first.records, ReportFormat::Csv) ==
               emit_report(second.records, ReportFormat::Csv),
           "CSV differs between runs");
}

void prior_tables(Outcome& o) {
  GrundySolver solver;
  std::size_t uniform = 0;
  std::size_t even = 0;
  for (const auto& [key, q] : reachable_up_to(2)) {
    const auto pred = predict_parity_shape(q);
    if (!pred) continue;
    (pred->source == PredictionSource::OddUniformParity ? uniform : even) += 1;
    o.expect(pred->value == solver.value(q), "parity table disagrees on " + serialize_instance(q));
  }
  o.expect(uniform > 0 && even > 0, "both tables exercised");
}

void lemma_sweep(Outcome& o) {
  const std::string cycle_key = iso_canonical_key(testing::bc_four_cycle());
  bool cycle_found = false;
  for (const Position& p : enumerate_instances({1, 3, false})) {
    const StructureReport r = classify(p);
    for (const LemmaCheck& c : check_lemmas(r)) {
      if (c.id == LemmaId::NoBCOnlyShape) continue;
      o.expect(c.holds, std::string(to_string(c.id)) + " fails on " + serialize_instance(p));
    }
    if (r.group == Group::BC && p.vertex_count() == 7 && iso_canonical_key(p) == cycle_key) {
      cycle_found = true;
    }
  }
  o.expect(cycle_found, "4-cycle BC instance not enumerated");
}

void self_consistency(Outcome& o) {
  SolveOptions plain;
  plain.memoize = false;
  SolveOptions iso;
  iso.iso_reduce = true;
  GrundySolver memo_solver;
  GrundySolver plain_solver(plain);
  GrundySolver iso_solver(iso);
  for (const auto& [key, q] : reachable_up_to(2)) {
    const GrundyResult g = memo_solver.solve(q);
    o.expect((g.value == 0) == g.winning_moves.empty(), "zero iff no winning move");
    o.expect(plain_solver.value(q) == g.value, "unmemoized differs");
    o.expect(iso_solver.value(q) == g.value, "iso-reduced differs");
  }
}

void self_play(Outcome& o) {
  auto table = std::make_shared<TranspositionTable>();
  GrundySolver engine(table);
  std::size_t games = 0;
  for (const Position& start : enumerate_instances({1, 2, false})) {
    if (engine.value(start) == 0) continue;
    for (unsigned seed = 0; seed < 100; ++seed) {
      std::mt19937 rng(seed);
      Position p = start;
      bool engine_to_move = true;
      bool engine_moved_last = false;
      while (!p.is_terminal()) {
        if (engine_to_move) {
          p = p.after(engine_move(engine, p));
        } else {
          const auto moves = legal_moves(p);
          std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
          p = p.after(moves[pick(rng)]);
        }
        engine_moved_last = engine_to_move;
        engine_to_move = !engine_to_move;
      }
      ++games;
      o.expect(engine_moved_last, "engine lost from " + serialize_instance(start) +
                                      " seed " + std::to_string(seed));
    }
  }
  o.expect(games > 0, "no games played");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "mex anchors", 1, mex_anchors},
      {2, "oracle anchors", 1, oracle_anchors},
      {3, "verify m=2 matches closed form", 10, verify_m2},
      {4, "verify m=3 completes deterministically", 300, verify_m3},
      {5, "prior parity tables reproduced", 60, prior_tables},
      {6, "structural lemma sweep m<=3", 60, lemma_sweep},
      {7, "solver self-consistency m=2", 60, self_consistency},
      {8, "engine wins every self-play game", 60, self_play},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    o.expect(secs <= c.budget_seconds, "over time budget");
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ("
              << std::fixed << std::setprecision(3) << secs << "s)";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
