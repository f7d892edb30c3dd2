#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "maxqp/assignment.hpp"
#include "maxqp/graph.hpp"

namespace maxqp {

inline constexpr int kDefaultWidthCap = 20;

/// Rooted tree of bags. Every vertex lies in a connected, nonempty set of bags and
/// every edge is covered by some bag.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;  // each sorted ascending
    std::vector<int> parent;                // -1 at the root
    int root = -1;

    /// max |bag| - 1, or -1 when there are no bags.
    int width() const;
};

/// Checks tree shape, vertex and edge coverage, and connectivity of each vertex's
/// bag set against `g`. Throws ValidationError.
void validate_decomposition(const WeightedGraph& g, const TreeDecomposition& td);

enum class NiceKind { leaf, introduce, forget, join };

const char* to_string(NiceKind kind);

struct NiceNode {
    std::vector<Vertex> bag;  // sorted ascending
    NiceKind kind = NiceKind::leaf;
    Vertex vertex = kNoVertex;        // introduced or forgotten vertex
    std::array<int, 2> children{-1, -1};
};

/// Nodes are stored children-first, so index order is a valid bottom-up schedule.
/// The root bag is empty (all vertices are forgotten on the way up).
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
};

/// Checks the four node-kind rules and the children-first ordering. Throws ValidationError.
void validate_nice(const NiceTreeDecomposition& ntd);

/// Min-fill elimination ordering (ties: smaller degree, then smaller id) turned into
/// a clique-tree decomposition. Disconnected components hang off one root.
/// Throws CapacityError carrying the offending bag width once it exceeds `width_cap`.
TreeDecomposition build_decomposition(const WeightedGraph& g, int width_cap = kDefaultWidthCap);

/// Same width, O(width * bags) nodes. Throws ValidationError when `td` is not a tree
/// with connected vertex traces and nonempty bags.
NiceTreeDecomposition to_nice(const TreeDecomposition& td);

/// Exact optimum by dynamic programming over the nice decomposition:
///   leaf       D[X,x] = 0
///   introduce  D[X,x] = D[Y, x - x_v] + sum_{u in N(v) cap X} a_{u,v} x_u x_v
///   forget     D[X,x] = max over x_v of D[Y, x + x_v]
///   join       D[X,x] = D[Y,x] + D[Z,x] - val_x(G[X])
/// The optimal assignment is recovered by backtracking stored forget choices.
/// O(2^w * w * nodes). Throws CapacityError when width > `width_cap`.
Assignment solve_treewidth(const WeightedGraph& g, const NiceTreeDecomposition& ntd,
                           int width_cap = kDefaultWidthCap);

/// build_decomposition -> to_nice -> solve_treewidth, falling back to brute force
/// when the width cap is exceeded and n <= `brute_force_limit`.
Assignment solve_exact_auto(const WeightedGraph& g, int width_cap = kDefaultWidthCap,
                            std::size_t brute_force_limit = 24);

}  // namespace maxqp
