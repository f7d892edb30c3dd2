#include "maxqp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "maxqp/errors.hpp"

namespace maxqp {

namespace {

void check_vertex(std::size_t n, Vertex v, std::size_t line) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
        std::string msg = "vertex id " + std::to_string(v + 1) + " out of range [1, " +
                          std::to_string(n) + "]";
        if (line != 0) throw ParseError(line, msg);
        throw ValidationError(msg);
    }
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        check_vertex(n_, e.u, 0);
        check_vertex(n_, e.v, 0);
        if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u + 1));
        if (!std::isfinite(e.w)) throw ValidationError("non-finite weight");
        if (e.w == 0.0) throw ValidationError("zero-weight edge");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            throw ValidationError("duplicate edge {" + std::to_string(edges_[i].u + 1) + "," +
                                  std::to_string(edges_[i].v + 1) + "}");
        }
    }

    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
        if (std::abs(e.w) != 1.0) unit_ = false;
    }
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    adj_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Canonical edge order makes each adjacency list come out sorted: for vertex x,
    // neighbors u < x arrive first (in u order), then neighbors v > x (in v order).
    for (const auto& e : edges_) {
        adj_[fill[e.u]++] = {e.v, e.w};
        adj_[fill[e.v]++] = {e.u, e.w};
    }
}

std::optional<double> WeightedGraph::weight(Vertex u, Vertex v) const noexcept {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_) {
        return std::nullopt;
    }
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v,
                               [](const Neighbor& a, Vertex x) { return a.v < x; });
    if (it != nb.end() && it->v == v) return it->w;
    return std::nullopt;
}

WeightedGraph load_graph(std::size_t n, std::span<const Entry> entries) {
    struct Acc {
        double sum = 0.0;
        int count = 0;
    };
    std::map<std::pair<Vertex, Vertex>, Acc> merged;
    for (const auto& e : entries) {
        check_vertex(n, e.u, e.line);
        check_vertex(n, e.v, e.line);
        if (!std::isfinite(e.w)) {
            if (e.line != 0) throw ParseError(e.line, "non-finite weight");
            throw ValidationError("non-finite weight");
        }
        if (e.u == e.v) {
            std::string msg = "self-loop at vertex " + std::to_string(e.u + 1) + " (diagonal must be zero)";
            if (e.line != 0) msg = "line " + std::to_string(e.line) + ": " + msg;
            throw ValidationError(msg);
        }
        auto& acc = merged[{std::min(e.u, e.v), std::max(e.u, e.v)}];
        acc.sum += e.w;
        ++acc.count;
    }
    std::vector<Edge> edges;
    edges.reserve(merged.size());
    for (const auto& [key, acc] : merged) {
        double w = acc.count == 1 ? acc.sum : acc.sum / acc.count;
        if (w != 0.0) edges.push_back({key.first, key.second, w});
    }
    return WeightedGraph(n, std::move(edges));
}

Subgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices) {
    Subgraph out;
    out.to_parent.assign(vertices.begin(), vertices.end());
    std::sort(out.to_parent.begin(), out.to_parent.end());
    if (std::adjacent_find(out.to_parent.begin(), out.to_parent.end()) != out.to_parent.end()) {
        throw ValidationError("induced_subgraph: duplicate vertex");
    }
    std::vector<Vertex> local(g.n(), kNoVertex);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        Vertex v = out.to_parent[i];
        if (v < 0 || static_cast<std::size_t>(v) >= g.n()) {
            throw ValidationError("induced_subgraph: vertex out of range");
        }
        local[v] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Vertex v : out.to_parent) {
        for (const auto& nb : g.neighbors(v)) {
            if (nb.v > v && local[nb.v] != kNoVertex) edges.push_back({local[v], local[nb.v], nb.w});
        }
    }
    out.graph = WeightedGraph(out.to_parent.size(), std::move(edges));
    return out;
}

int max_degree(const WeightedGraph& g) {
    std::size_t best = 0;
    for (std::size_t v = 0; v < g.n(); ++v) best = std::max(best, g.degree(static_cast<Vertex>(v)));
    return static_cast<int>(best);
}

int degeneracy(const WeightedGraph& g) {
    const std::size_t n = g.n();
    if (n == 0) return 0;
    const int dmax = max_degree(g);
    std::vector<int> deg(n);
    std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(dmax) + 1);
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
        buckets[deg[v]].push_back(static_cast<Vertex>(v));
    }
    // Lazy bucket queue: stale entries are skipped when popped.
    std::vector<char> removed(n, 0);
    int result = 0;
    int cur = 0;
    for (std::size_t done = 0; done < n;) {
        while (buckets[cur].empty()) ++cur;
        Vertex v = buckets[cur].back();
        buckets[cur].pop_back();
        if (removed[v] || deg[v] != cur) continue;
        removed[v] = 1;
        ++done;
        result = std::max(result, cur);
        for (const auto& nb : g.neighbors(v)) {
            if (removed[nb.v]) continue;
            --deg[nb.v];
            buckets[deg[nb.v]].push_back(nb.v);
        }
        if (cur > 0) --cur;
    }
    return result;
}

InstanceStats stats(const WeightedGraph& g) {
    InstanceStats s;
    for (const auto& e : g.edges()) s.abs_weight += std::abs(e.w);
    s.max_degree = max_degree(g);
    s.degeneracy = degeneracy(g);
    s.edges = g.m();
    s.vertices = g.n();
    return s;
}

}  // namespace maxqp
