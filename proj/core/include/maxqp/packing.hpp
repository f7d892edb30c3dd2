#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "maxqp/assignment.hpp"
#include "maxqp/graph.hpp"
#include "maxqp/matching.hpp"

namespace maxqp {

/// Edge {u,v} is good under x when a_{u,v} x_u x_v > 0. Throws ValidationError if
/// {u,v} is not an edge.
bool edge_is_good(const WeightedGraph& g, std::span<const Spin> x, Vertex u, Vertex v);

/// A triangle is good when its three unit weights multiply to +1, i.e. some
/// assignment makes all three edges good. Requires a unit instance and all three
/// edges present; throws ValidationError otherwise.
bool triangle_is_good(const WeightedGraph& g, Vertex u, Vertex v, Vertex w);

/// Disjoint vertex sets F_1..F_t, each inducing an easy subgraph: a connected
/// split graph whose clique side is the center edge, with no bad triangle.
struct EasyPacking {
    /// Each part lists its center endpoints first, then outside vertices in attach order.
    std::vector<std::vector<Vertex>> parts;
    std::vector<std::pair<Vertex, Vertex>> centers;
    std::size_t edge_count = 0;  // m(F) = sum of |E(G[F_i])|
    std::size_t covered = 0;     // |V_F|
    std::vector<Vertex> leftover;  // I* = V \ V_F, ascending
    /// The matching the parts were seeded from: M* after EasyPack step 3, or the
    /// maximum matching M for star packings.
    std::vector<std::pair<Vertex, Vertex>> seed_matching;
};

/// Structural check: disjoint parts, center is an edge, outside vertices form an
/// independent set adjacent only to center endpoints, every triangle on the center
/// is good, and the bookkeeping fields agree. Throws ValidationError on breach.
void validate_easy_packing(const WeightedGraph& g, const EasyPacking& p);

/// validate_easy_packing plus: every part induces a star.
void validate_star_packing(const WeightedGraph& g, const EasyPacking& p);

/// Orients each matched edge to be good and glues the pieces with disjoint-union
/// flips, then extends to all of V. Value >= w(M).
Assignment matching_to_solution(const WeightedGraph& g, const Matching& m);

/// Orients each part outward from its center so every in-part edge contributes +1,
/// glues parts, then extends to V. Value >= m(F). Unit instances only; throws
/// ValidationError if a part contains a bad triangle.
Assignment packing_to_solution(const WeightedGraph& g, const EasyPacking& p);

/// Algorithm EasyPack on a unit instance:
///   1. maximal matching M, I = unmatched vertices;
///   2. M* = {}, I* = I;
///   3. for each {x,y} in M, if two vertices u < v of I* both close a triangle with
///      {x,y}, take {u,x},{v,y} into M* and drop u,v from I*; else take {x,y};
///   4. seed one part per M* edge;
///   5. each v in I* (ascending) joins the first part whose center forms with v a
///      path or a good triangle.
/// Result satisfies m(F) >= |V_F|/2.
EasyPacking easypack(const WeightedGraph& g);

/// Star packing seeded from a maximum matching; each unmatched non-isolated vertex
/// (ascending) joins the first part that stays a star. Unit instances only.
EasyPacking star_packing(const WeightedGraph& g);

}  // namespace maxqp
