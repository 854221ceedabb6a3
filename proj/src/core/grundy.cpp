#include "takeaway/grundy.hpp"

#include <limits>

#include "takeaway/error.hpp"

namespace takeaway {

GrundySolver::GrundySolver(SolveOptions options)
    : GrundySolver(std::make_shared<TranspositionTable>(), options) {}

GrundySolver::GrundySolver(std::shared_ptr<TranspositionTable> table, SolveOptions options)
    : options_(options), table_(std::move(table)) {
  if (!table_) table_ = std::make_shared<TranspositionTable>();
}

void GrundySolver::check_bound(const Position& p) const {
  if (p.vertex_count() > options_.max_vertices) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "position has " + std::to_string(p.vertex_count()) +
                    " vertices, solver bound is " + std::to_string(options_.max_vertices));
  }
}

std::string GrundySolver::memo_key(const Position& p) const {
  // Tagged so labeled and isomorphism keys never collide in one table.
  if (options_.iso_reduce && p.vertex_count() <= options_.iso_bound) {
    return 'I' + iso_canonical_key(p, options_.iso_bound);
  }
  return 'L' + canonical_key(p);
}

// Recursion depth is at most |V| + |E|: every move removes a vertex or an edge.
Grundy GrundySolver::compute(const Position& p) {
  if (p.is_terminal()) return 0;
  std::string key;
  if (options_.memoize) {
    key = memo_key(p);
    if (auto hit = table_->find(key)) return *hit;
  }
  std::vector<Grundy> seen;
  const auto moves = legal_moves(p);
  seen.reserve(moves.size());
  for (const Move& m : moves) seen.push_back(compute(p.after(m)));
  const std::size_t g = mex(seen);
  if (g > std::numeric_limits<Grundy>::max()) {
    throw Error(ErrorCode::ValueOverflow, "Grundy value exceeds 255");
  }
  if (options_.memoize) table_->insert(key, static_cast<Grundy>(g));
  return static_cast<Grundy>(g);
}

bool GrundySolver::compute_zero(const Position& p) {
  if (p.is_terminal()) return true;
  std::string key;
  if (options_.memoize) {
    key = memo_key(p);
    if (auto it = zero_memo_.find(key); it != zero_memo_.end()) return it->second;
  }
  bool zero = true;
  for (const Move& m : legal_moves(p)) {
    if (compute_zero(p.after(m))) {
      zero = false;
      break;
    }
  }
  if (options_.memoize) zero_memo_.emplace(std::move(key), zero);
  return zero;
}

Grundy GrundySolver::value(const Position& p) {
  check_bound(p);
  return compute(p);
}

GrundyResult GrundySolver::solve(const Position& p) {
  check_bound(p);
  GrundyResult result;
  std::vector<Grundy> values;
  for (const Move& m : legal_moves(p)) {
    const Grundy g = compute(p.after(m));
    values.push_back(g);
    result.options.push_back({m, g});
    if (g == 0) result.winning_moves.push_back(m);
  }
  const std::size_t g = mex(values);
  if (g > std::numeric_limits<Grundy>::max()) {
    throw Error(ErrorCode::ValueOverflow, "Grundy value exceeds 255");
  }
  result.value = static_cast<Grundy>(g);
  return result;
}

std::vector<Move> GrundySolver::winning_moves(const Position& p) {
  return solve(p).winning_moves;
}

bool GrundySolver::is_zero(const Position& p) {
  check_bound(p);
  return compute_zero(p);
}

Move engine_move(GrundySolver& solver, const Position& p) {
  if (p.is_terminal()) throw Error(ErrorCode::IllegalMove, "no moves in a terminal position");
  const GrundyResult g = solver.solve(p);
  return g.winning_moves.empty() ? g.options.front().move : g.winning_moves.front();
}

}  // namespace takeaway
