#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "maxqp/graph.hpp"

namespace maxqp {

/// Vertex-disjoint edge set with its absolute weight w(M) = sum |a_{u,v}|.
struct Matching {
    std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, in selection order
    double total_abs_weight = 0.0;
    std::vector<Vertex> mate;  // partner per vertex, kNoVertex when unmatched

    std::size_t size() const noexcept { return edges.size(); }
    bool is_matched(Vertex v) const noexcept { return mate[v] != kNoVertex; }
};

/// One greedy round: the chosen edge and every edge removed with it (itself
/// included), as indices into g.edges().
struct GreedyRound {
    std::size_t chosen;
    std::vector<std::size_t> removed;
};

/// Repeatedly takes the heaviest remaining edge by |a_{u,v}| and discards every
/// edge sharing an endpoint with it. Equal weights are ordered by (u, v).
/// Guarantees w(M) >= w(E) / (2 * maxdeg). O(m log m).
///
/// When `trace` is non-null the removed-edge partition E_1..E_t is recorded.
Matching greedy_sorted_matching(const WeightedGraph& g, std::vector<GreedyRound>* trace = nullptr);

/// Inclusion-wise maximal matching from one scan of the canonical edge order.
Matching maximal_matching(const WeightedGraph& g);

/// Maximum-cardinality matching on a general graph (Edmonds' blossom contraction,
/// augmenting from each free vertex in id order). O(n^3) worst case.
Matching maximum_matching(const WeightedGraph& g);

/// Throws ValidationError unless `m` is a vertex-disjoint set of edges of `g`
/// whose mate array and weight are consistent.
void validate_matching(const WeightedGraph& g, const Matching& m);

}  // namespace maxqp
