#pragma once

#include <optional>
#include <string_view>

#include "takeaway/position.hpp"
#include "takeaway/structure.hpp"
#include "takeaway/transposition_table.hpp"

namespace takeaway {

/// Which closed-form rule produced a prediction.
enum class PredictionSource {
  OddCatY,           // groups I, III, IV, V with odd |E(CatY)|: 1
  EvenCatYMixed,     // groups III, IV, V with even |E(CatY)|: 4
  EvenCatYAllA,      // group I with even |E(CatY)|: 0
  AllB,              // group II: 3
  OddUniformParity,  // 3-uniform, by (|V|, |E|) parity
  EvenEdgeParity,    // one even edge, by |V| parity
  OutsideTaxonomy,   // no rule covers the shape
  NonConforming,
};

struct Prediction {
  std::optional<Grundy> value;
  PredictionSource source = PredictionSource::NonConforming;
};

/// Closed-form value for an initial instance, read off the report alone.
/// Throws InternalInconsistency for group II with odd |E(CatY)|, which the
/// counting identity rules out.
Prediction predict(const StructureReport& r);

/// Parity table for 3-uniform positions, isolated vertices allowed:
/// (|V| even, |E| even) -> 0, (even, odd) -> 3, (odd, odd) -> 2,
/// (odd, even) -> 1.
Grundy odd_uniform_value(std::size_t vertex_count, std::size_t edge_count) noexcept;

/// One even edge plus isolated vertices: even |V| -> 2, odd |V| -> 3.
Grundy even_edge_value(std::size_t vertex_count) noexcept;

/// Applies the two parity tables to an arbitrary (for instance mid-game)
/// position. Returns nullopt when the position has neither shape.
std::optional<Prediction> predict_parity_shape(const Position& p);

std::string_view to_string(PredictionSource s) noexcept;

}  // namespace takeaway
