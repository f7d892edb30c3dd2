#include "maxqp/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "maxqp/compose.hpp"
#include "maxqp/errors.hpp"

namespace maxqp {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ValidationError("epsilon must lie in (0, 1]");
}

struct ExactPiece {
    PartialSpins spins;  // spins on the piece's vertices, indexed in the parent graph
    double value = 0.0;
    int width = -1;
};

// Optimum of G[vertices] via the treewidth engine, lifted back to parent ids.
ExactPiece solve_piece(const WeightedGraph& g, const std::vector<Vertex>& vertices, int width_cap) {
    ExactPiece piece;
    piece.spins.assign(g.n(), 0);
    if (vertices.empty()) return piece;
    const Subgraph sub = induced_subgraph(g, vertices);
    const TreeDecomposition td = build_decomposition(sub.graph, width_cap);
    piece.width = td.width();
    const Assignment local = solve_treewidth(sub.graph, to_nice(td), width_cap);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) piece.spins[sub.to_parent[i]] = local[i];
    piece.value = local.value();
    return piece;
}

std::vector<Vertex> complement(std::size_t n, const std::vector<Vertex>& removed) {
    std::vector<char> drop(n, 0);
    for (Vertex v : removed) drop[v] = 1;
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < n; ++v) {
        if (!drop[v]) keep.push_back(static_cast<Vertex>(v));
    }
    return keep;
}

// Smallest integer k with k >= bound, tolerant of bound being a float just above an integer.
int ceil_integer(double bound) {
    const double k = std::ceil(bound - 1e-9);
    return std::max(1, static_cast<int>(k));
}

}  // namespace

std::vector<Vertex> LayerStructure::layer_class(int i, int k) const {
    std::vector<Vertex> out;
    for (std::size_t j = static_cast<std::size_t>(i); j < layers.size(); j += static_cast<std::size_t>(k)) {
        out.insert(out.end(), layers[j].begin(), layers[j].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

LayerStructure bfs_layers(const WeightedGraph& g, Vertex root) {
    const std::size_t n = g.n();
    LayerStructure ls;
    ls.layer_of.assign(n, -1);
    if (n == 0) return ls;
    if (root < 0 || static_cast<std::size_t>(root) >= n) throw ValidationError("bfs_layers: root out of range");
    auto run = [&](Vertex start) {
        ls.roots.push_back(start);
        std::queue<Vertex> q;
        ls.layer_of[start] = 0;
        q.push(start);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (const auto& nb : g.neighbors(v)) {
                if (ls.layer_of[nb.v] != -1) continue;
                ls.layer_of[nb.v] = ls.layer_of[v] + 1;
                q.push(nb.v);
            }
        }
    };
    run(root);
    for (std::size_t v = 0; v < n; ++v) {
        if (ls.layer_of[v] == -1) run(static_cast<Vertex>(v));
    }
    const int deepest = *std::max_element(ls.layer_of.begin(), ls.layer_of.end());
    ls.layers.resize(static_cast<std::size_t>(deepest) + 1);
    for (std::size_t v = 0; v < n; ++v) ls.layers[ls.layer_of[v]].push_back(static_cast<Vertex>(v));
    return ls;
}

int baker_modulus(double epsilon) {
    check_epsilon(epsilon);
    return ceil_integer(4.0 / epsilon);
}

int partition_modulus(double epsilon, std::size_t h) {
    check_epsilon(epsilon);
    return ceil_integer(6.0 * static_cast<double>(h) / epsilon);
}

std::size_t density_bound(const WeightedGraph& g) {
    std::size_t active = 0;
    for (std::size_t v = 0; v < g.n(); ++v) active += g.degree(static_cast<Vertex>(v)) > 0 ? 1 : 0;
    if (active == 0) return 1;
    return std::max<std::size_t>(1, (g.m() + active - 1) / active);
}

ApproxResult solve_baker(const WeightedGraph& g, double epsilon, int width_cap) {
    const int k = baker_modulus(epsilon);
    const LayerStructure ls = bfs_layers(g);

    ApproxResult r;
    int best_index = -1;
    int max_width = -1;
    for (int i = 0; i < k; ++i) {
        const std::vector<Vertex> keep = complement(g.n(), ls.layer_class(i, k));
        ExactPiece piece;
        try {
            piece = solve_piece(g, keep, width_cap);
        } catch (const CapacityError& e) {
            throw CapacityError("baker: G_" + std::to_string(i) + " (k=" + std::to_string(k) + "): " + e.what(),
                                e.achieved());
        }
        max_width = std::max(max_width, piece.width);
        Assignment x = extend_from_induced(g, piece.spins);
        if (best_index == -1 || x.value() > r.value) {
            best_index = i;
            r.value = x.value();
            r.assignment = std::move(x);
        }
    }
    if (g.n() == 0) r.assignment = Assignment(g, {});
    r.guarantee = std::max(0.0, 1.0 - 4.0 / k);
    r.guarantee_expr = "1-4/" + std::to_string(k);
    r.certificate = {{"epsilon", epsilon},
                     {"k", static_cast<double>(k)},
                     {"layers", static_cast<double>(ls.depth())},
                     {"best_index", static_cast<double>(best_index)},
                     {"max_width", static_cast<double>(max_width)}};
    return r;
}

VertexPartition load_partition(std::size_t n, std::vector<std::vector<Vertex>> parts) {
    if (parts.empty()) throw ValidationError("partition: at least one part required");
    std::vector<char> seen(n, 0);
    for (auto& part : parts) {
        for (Vertex v : part) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                throw ValidationError("partition: vertex " + std::to_string(v + 1) + " out of range");
            }
            if (seen[v]) throw ValidationError("partition: vertex " + std::to_string(v + 1) + " appears twice");
            seen[v] = 1;
        }
        std::sort(part.begin(), part.end());
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v]) throw ValidationError("partition: vertex " + std::to_string(v + 1) + " is not covered");
    }
    return {std::move(parts), PartitionSource::external_file};
}

VertexPartition heuristic_partition(const WeightedGraph& g, int k) {
    if (k < 1) throw ValidationError("heuristic_partition: k must be >= 1");
    const LayerStructure ls = bfs_layers(g);
    VertexPartition p;
    p.source = PartitionSource::bfs_layer_heuristic;
    p.parts.resize(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < g.n(); ++v) p.parts[ls.layer_of[v] % k].push_back(static_cast<Vertex>(v));
    return p;
}

ApproxResult solve_partition_scheme(const WeightedGraph& g, double epsilon,
                                    const std::optional<VertexPartition>& external, int width_cap) {
    if (!g.is_unit()) throw ValidationError("partition scheme requires unit weights");
    const std::size_t h = density_bound(g);
    const int required = partition_modulus(epsilon, h);
    VertexPartition partition;
    if (external) {
        if (external->k() < static_cast<std::size_t>(required)) {
            throw ValidationError("partition has " + std::to_string(external->k()) + " parts; epsilon=" +
                                  std::to_string(epsilon) + " with h=" + std::to_string(h) + " needs at least " +
                                  std::to_string(required));
        }
        partition = load_partition(g.n(), external->parts);
    } else {
        partition = heuristic_partition(g, required);
    }
    const int k = static_cast<int>(partition.k());

    std::vector<int> part_of(g.n(), -1);
    for (int i = 0; i < k; ++i) {
        for (Vertex v : partition.parts[i]) part_of[v] = i;
    }
    std::vector<std::size_t> cut(k, 0);  // m_i = |E(V_i, V \ V_i)|
    for (const auto& e : g.edges()) {
        if (part_of[e.u] != part_of[e.v]) {
            ++cut[part_of[e.u]];
            ++cut[part_of[e.v]];
        }
    }

    ApproxResult r;
    int best_index = -1;
    int max_width = -1;
    for (int i = 0; i < k; ++i) {
        const auto& inside = partition.parts[i];
        const std::vector<Vertex> outside = complement(g.n(), inside);
        ExactPiece a;
        ExactPiece b;
        try {
            a = solve_piece(g, inside, width_cap);
            b = solve_piece(g, outside, width_cap);
        } catch (const CapacityError& e) {
            throw CapacityError("partition scheme: part " + std::to_string(i) + ": " + e.what(), e.achieved());
        }
        max_width = std::max({max_width, a.width, b.width});
        Assignment x = extend_from_induced(g, combine_disjoint(g, a.spins, b.spins));
        if (best_index == -1 || x.value() > r.value) {
            best_index = i;
            r.value = x.value();
            r.assignment = std::move(x);
        }
    }
    if (g.n() == 0) r.assignment = Assignment(g, {});
    r.guarantee = std::max(0.0, 1.0 - 6.0 * static_cast<double>(h) / k);
    r.guarantee_expr = "1-6*" + std::to_string(h) + "/" + std::to_string(k);
    r.certificate = {{"epsilon", epsilon},
                     {"h", static_cast<double>(h)},
                     {"k", static_cast<double>(k)},
                     {"best_index", static_cast<double>(best_index)},
                     {"best_cut_edges", best_index >= 0 ? static_cast<double>(cut[best_index]) : 0.0},
                     {"max_width", static_cast<double>(max_width)}};
    return r;
}

}  // namespace maxqp
