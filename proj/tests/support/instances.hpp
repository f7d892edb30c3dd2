#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "maxqp/generate.hpp"
#include "maxqp/graph.hpp"

namespace maxqp::testing {

enum class Weights { unit, integer, real, negative };

inline double draw_weight(SplitMix64& rng, Weights w) {
    switch (w) {
        case Weights::unit: return rng.coin() ? 1.0 : -1.0;
        case Weights::integer: {
            const double mag = static_cast<double>(1 + rng.below(5));
            return rng.coin() ? mag : -mag;
        }
        case Weights::real: {
            const double mag = 0.05 + rng.uniform();
            return rng.coin() ? mag : -mag;
        }
        case Weights::negative: return -static_cast<double>(1 + rng.below(3));
    }
    return 1.0;
}

inline WeightedGraph from_pairs(std::size_t n, const std::set<std::pair<Vertex, Vertex>>& pairs, SplitMix64& rng,
                                Weights w) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v, draw_weight(rng, w)});
    return WeightedGraph(n, std::move(edges));
}

/// G(n, p) with p = percent / 100.
inline WeightedGraph random_graph(SplitMix64& rng, std::size_t n, unsigned percent, Weights w) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
            if (rng.below(100) < percent) pairs.insert({u, v});
    return from_pairs(n, pairs, rng, w);
}

/// Random edge attempts that keep every degree at most `maxdeg`.
inline WeightedGraph random_bounded_degree(SplitMix64& rng, std::size_t n, int maxdeg, std::size_t attempts,
                                           Weights w) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    std::vector<int> deg(n, 0);
    for (std::size_t t = 0; t < attempts && n > 1; ++t) {
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        if (u == v || deg[u] >= maxdeg || deg[v] >= maxdeg) continue;
        if (!pairs.insert({std::min(u, v), std::max(u, v)}).second) continue;
        ++deg[u];
        ++deg[v];
    }
    return from_pairs(n, pairs, rng, w);
}

/// Vertex i links to at most d distinct earlier vertices, so the degeneracy is <= d.
inline WeightedGraph random_degenerate(SplitMix64& rng, std::size_t n, int d, Weights w) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
        const int links = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
        for (int t = 0; t < links; ++t) pairs.insert({static_cast<Vertex>(rng.below(v)), v});
    }
    return from_pairs(n, pairs, rng, w);
}

/// Random k-tree with each edge then kept with probability percent/100: treewidth <= k.
inline WeightedGraph random_partial_ktree(SplitMix64& rng, std::size_t n, int k, unsigned percent, Weights w) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::vector<Vertex>> cliques;
    const Vertex base = static_cast<Vertex>(std::min<std::size_t>(n, static_cast<std::size_t>(k) + 1));
    std::vector<Vertex> first(base);
    std::iota(first.begin(), first.end(), 0);
    for (Vertex u = 0; u < base; ++u)
        for (Vertex v = u + 1; v < base; ++v) pairs.insert({u, v});
    if (static_cast<int>(first.size()) == k + 1) {
        for (int drop = 0; drop <= k; ++drop) {
            auto c = first;
            c.erase(c.begin() + drop);
            cliques.push_back(c);
        }
    }
    for (Vertex v = base; v < static_cast<Vertex>(n); ++v) {
        auto c = cliques[rng.below(cliques.size())];
        for (Vertex u : c) pairs.insert({u, v});
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            auto nc = c;
            nc[drop] = v;
            std::sort(nc.begin(), nc.end());
            cliques.push_back(nc);
        }
    }
    std::set<std::pair<Vertex, Vertex>> kept;
    for (auto p : pairs)
        if (rng.below(100) < percent) kept.insert(p);
    return from_pairs(n, kept, rng, w);
}

/// Random labelled tree: vertex i > 0 hangs off a uniformly chosen earlier vertex.
inline WeightedGraph random_tree(SplitMix64& rng, std::size_t n, Weights w) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) pairs.insert({static_cast<Vertex>(rng.below(v)), v});
    return from_pairs(n, pairs, rng, w);
}

/// Drops isolated vertices by relabelling (keeps relative order).
inline WeightedGraph without_isolated(const WeightedGraph& g) {
    std::vector<Vertex> id(g.n(), kNoVertex);
    Vertex next = 0;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (g.degree(static_cast<Vertex>(v)) > 0) id[v] = next++;
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({id[e.u], id[e.v], e.w});
    return WeightedGraph(static_cast<std::size_t>(next), std::move(edges));
}

inline WeightedGraph make_graph(std::size_t n, std::vector<Edge> edges) { return WeightedGraph(n, std::move(edges)); }

}  // namespace maxqp::testing
