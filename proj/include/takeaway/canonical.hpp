#pragma once

#include <cstddef>
#include <string>

#include "takeaway/position.hpp"

namespace takeaway {

inline constexpr std::size_t kDefaultIsoBound = 10;

/// Relabeling-invariant key: equal for isomorphic positions, distinct
/// otherwise. Vertices are first split into classes by iterated incidence
/// refinement; the key is the minimum encoding over all relabelings that
/// respect the class order.
///
/// Throws SizeBoundExceeded when the position has more than `max_vertices`
/// vertices.
std::string iso_canonical_key(const Position& p, std::size_t max_vertices = kDefaultIsoBound);

}  // namespace takeaway
