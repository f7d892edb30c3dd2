#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxqp/approx.hpp"
#include "maxqp/graph.hpp"
#include "maxqp/treewidth.hpp"

namespace maxqp {

/// BFS layers L_0..L_l. Components not containing the root are layered from their
/// own minimum-id vertex; layer indices are shared across components.
struct LayerStructure {
    std::vector<int> layer_of;               // per vertex
    std::vector<std::vector<Vertex>> layers;  // ascending ids inside each layer
    std::vector<Vertex> roots;               // one BFS root per component

    std::size_t depth() const noexcept { return layers.size(); }

    /// Class L_i (mod k): union of the layers whose index is congruent to i.
    std::vector<Vertex> layer_class(int i, int k) const;
};

LayerStructure bfs_layers(const WeightedGraph& g, Vertex root = 0);

/// Smallest k with 4/k <= epsilon.
int baker_modulus(double epsilon);

/// Smallest k with k >= 6h/epsilon.
int partition_modulus(double epsilon, std::size_t h);

/// h = max(1, ceil(m / n')) with n' the number of non-isolated vertices: the
/// density bound m <= h n' that the star-packing lower bound opt >= m/(3h) uses.
std::size_t density_bound(const WeightedGraph& g);

/// For each i < k (k = baker_modulus), solves G_i = G - L_i exactly on a tree
/// decomposition, extends to G, and keeps the best (ties: smallest i).
/// value >= (1 - 4/k) opt(G) on apex-minor-free inputs. Throws CapacityError
/// naming i and the width when a G_i decomposition exceeds `width_cap`.
ApproxResult solve_baker(const WeightedGraph& g, double epsilon, int width_cap = kDefaultWidthCap);

enum class PartitionSource { external_file, bfs_layer_heuristic };

/// Disjoint cover V_0..V_{k-1} of V; parts may be empty.
struct VertexPartition {
    std::vector<std::vector<Vertex>> parts;
    PartitionSource source = PartitionSource::external_file;

    std::size_t k() const noexcept { return parts.size(); }
};

/// Validates that `parts` is a disjoint cover of the n vertices. Throws ValidationError.
VertexPartition load_partition(std::size_t n, std::vector<std::vector<Vertex>> parts);

/// Vertex v goes to part (BFS layer of v) mod k.
VertexPartition heuristic_partition(const WeightedGraph& g, int k);

/// Unit instances. k = partition_modulus(epsilon, density_bound(g)); for each i
/// solves G[V_i] and G[V \ V_i] exactly, glues them with a disjoint-union flip and
/// keeps the best. value >= (1 - 6h/k) opt(G) whenever every piece fits the width
/// cap. An external partition must have at least k parts; otherwise the BFS-layer
/// heuristic partition with exactly k parts is used.
ApproxResult solve_partition_scheme(const WeightedGraph& g, double epsilon,
                                    const std::optional<VertexPartition>& external = std::nullopt,
                                    int width_cap = kDefaultWidthCap);

}  // namespace maxqp
