#pragma once

#include "homdist/graph.hpp"

namespace homdist {

/// Finite-graph diagnostic for the connected existentially closed property,
/// restricted to avoid sets of size <= t_max: for every pair u, v (u = v
/// allowed, adjacent u != v skipped) and every such T avoiding them, some
/// path of length >= 2 connects u to v with no internal vertex inside or
/// adjacent to T. The u = v clause asks for a neighbour of u outside and
/// non-adjacent to T. The empty graph reports false.
bool is_cec_bounded(const Graph& g, int t_max);
bool is_cec_bounded_serial(const Graph& g, int t_max);

}  // namespace homdist
