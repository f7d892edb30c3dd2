#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace maxqp {

/// Internal vertex id, 0-based. Files and the CLI use 1-based ids.
using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

/// Absolute tolerance used for every floating-point comparison of objective values.
inline constexpr double kTolerance = 1e-9;

struct Edge {
    Vertex u;  // u < v
    Vertex v;
    double w;
};

struct Neighbor {
    Vertex v;
    double w;
};

/// One raw matrix entry a_{u,v} as read from an instance description.
/// `line` is the 1-based source line, or 0 when not file-backed.
struct Entry {
    Vertex u;
    Vertex v;
    double w;
    std::size_t line = 0;
};

/// Symmetric zero-diagonal instance matrix A viewed as an undirected weighted graph.
///
/// Each nonzero a_{u,v} is one stored edge (u < v), edges are kept in canonical
/// (u, v) order, and adjacency lists are sorted by neighbor id. Immutable once built.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Builds from already-canonical data. Throws ValidationError on self-loops,
    /// out-of-range ids, duplicate pairs, zero or non-finite weights.
    WeightedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    bool is_unit() const noexcept { return unit_; }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(Vertex v) const noexcept {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    /// a_{u,v} if {u,v} is an edge.
    std::optional<double> weight(Vertex u, Vertex v) const noexcept;
    bool has_edge(Vertex u, Vertex v) const noexcept { return weight(u, v).has_value(); }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbor> adj_;
    bool unit_ = true;
};

/// Builds a graph from raw entries, merging (u,v)/(v,u) duplicates by averaging
/// (a'_{u,v} = a'_{v,u} = mean of the given entries for the pair) and dropping pairs
/// whose merged weight is zero. Self-loops and out-of-range ids are rejected.
WeightedGraph load_graph(std::size_t n, std::span<const Entry> entries);

/// G[S] with local ids assigned in increasing parent-id order.
struct Subgraph {
    WeightedGraph graph;
    std::vector<Vertex> to_parent;
};

/// `vertices` need not be sorted; duplicates are rejected.
Subgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices);

struct InstanceStats {
    double abs_weight = 0.0;  // ||A|| as the single-counted edge sum of |w|
    int max_degree = 0;
    int degeneracy = 0;
    std::size_t edges = 0;     // numerator of the density m/n
    std::size_t vertices = 0;  // denominator

    double density() const noexcept {
        return vertices == 0 ? 0.0 : static_cast<double>(edges) / static_cast<double>(vertices);
    }
};

InstanceStats stats(const WeightedGraph& g);

/// Smallest d such that every subgraph has a vertex of degree <= d (bucket-queue peeling).
int degeneracy(const WeightedGraph& g);

int max_degree(const WeightedGraph& g);

}  // namespace maxqp
