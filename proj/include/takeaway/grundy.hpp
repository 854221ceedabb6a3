#pragma once

#include <cstddef>
#include <memory>
#include <ranges>
#include <string>
#include <unordered_map>
#include <vector>

#include "takeaway/canonical.hpp"
#include "takeaway/position.hpp"
#include "takeaway/transposition_table.hpp"

namespace takeaway {

/// Minimum excludant: the least non-negative integer not in `values`.
template <std::ranges::input_range R>
  requires std::unsigned_integral<std::ranges::range_value_t<R>>
std::size_t mex(R&& values) {
  std::vector<bool> seen;
  for (auto v : values) {
    if (v >= seen.size()) seen.resize(static_cast<std::size_t>(v) + 1, false);
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::size_t m = 0;
  while (m < seen.size() && seen[m]) ++m;
  return m;
}

inline constexpr std::size_t kDefaultVertexBound = 16;

struct SolveOptions {
  bool memoize = true;
  bool iso_reduce = false;  // memo keyed by isomorphism class where small enough
  std::size_t max_vertices = kDefaultVertexBound;
  std::size_t iso_bound = kDefaultIsoBound;
};

struct OptionValue {
  Move move;
  Grundy value;
};

struct GrundyResult {
  Grundy value = 0;
  std::vector<OptionValue> options;  // legal-move order
  std::vector<Move> winning_moves;   // options of value 0
};

/// Exact Sprague-Grundy evaluation by exhaustive game-tree search.
///
/// Several solvers may share one table across threads. A solver itself is
/// not thread-safe.
class GrundySolver {
 public:
  explicit GrundySolver(SolveOptions options = {});
  GrundySolver(std::shared_ptr<TranspositionTable> table, SolveOptions options = {});

  /// All of these throw SizeBoundExceeded above `max_vertices`.
  Grundy value(const Position& p);
  GrundyResult solve(const Position& p);
  std::vector<Move> winning_moves(const Position& p);

  /// Win/loss-only search that stops at the first zero-valued option.
  /// Agrees with value(p) == 0.
  bool is_zero(const Position& p);

  const SolveOptions& options() const noexcept { return options_; }
  TranspositionTable& table() noexcept { return *table_; }
  const TranspositionTable& table() const noexcept { return *table_; }

 private:
  void check_bound(const Position& p) const;
  std::string memo_key(const Position& p) const;
  Grundy compute(const Position& p);
  bool compute_zero(const Position& p);

  SolveOptions options_;
  std::shared_ptr<TranspositionTable> table_;
  std::unordered_map<std::string, bool> zero_memo_;
};

/// Engine policy: the first winning move in legal-move order, otherwise the
/// first legal move. Throws IllegalMove on a terminal position.
Move engine_move(GrundySolver& solver, const Position& p);

}  // namespace takeaway
