#pragma once

#include <cstddef>

#include "maxqp/assignment.hpp"
#include "maxqp/graph.hpp"

namespace maxqp {

inline constexpr std::size_t kBruteForceLimit = 28;

/// Exhaustive optimum over the 2^(n-1) assignments with x_1 = +1, walked in Gray-code
/// order so each step is one flip updated through the local field
///   delta(v) = -2 x_v sum_{u in N(v)} a_{u,v} x_u.
/// Ties go to the lexicographically smallest assignment (-1 < +1).
/// Throws CapacityError when n > `max_vertices`.
Assignment brute_force(const WeightedGraph& g, std::size_t max_vertices = kBruteForceLimit);

/// Replaces each edge {u,w} of a simple graph (weights ignored) by a path u - s - w
/// through a new vertex s = n + edge index. The edge at the lower-id original
/// endpoint gets +1, the other -1. The result is bipartite and 2-degenerate, and
/// opt(G') = 2 * maxcut(G).
WeightedGraph subdivide_for_maxcut(const WeightedGraph& g);

}  // namespace maxqp
