#include "maxqp/matching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <span>
#include <string>

#include "maxqp/errors.hpp"

namespace maxqp {

namespace {

Matching empty_matching(const WeightedGraph& g) {
    Matching m;
    m.mate.assign(g.n(), kNoVertex);
    return m;
}

// Edges are stored sorted by (u, v), so breaking ties on the endpoints is the
// same as breaking them on the edge index.
struct GreedyKey {
    double abs_w;
    Vertex u;
    Vertex v;
};

void take(Matching& m, Vertex u, Vertex v, double w) {
    if (u > v) std::swap(u, v);
    m.edges.emplace_back(u, v);
    m.mate[u] = v;
    m.mate[v] = u;
    m.total_abs_weight += std::abs(w);
}

// Edmonds' blossom algorithm in the classic array form: BFS over alternating
// trees from one free root, contracting odd cycles by relabelling their base.
class Blossom {
public:
    explicit Blossom(const WeightedGraph& g)
        : g_(g), n_(g.n()), match_(n_, kNoVertex), parent_(n_), base_(n_), used_(n_), in_blossom_(n_),
          lca_mark_(n_) {}

    std::vector<Vertex> run() {
        // Warm start with a maximal matching; the augmentation phase fixes the rest.
        for (const auto& e : g_.edges()) {
            if (match_[e.u] == kNoVertex && match_[e.v] == kNoVertex) {
                match_[e.u] = e.v;
                match_[e.v] = e.u;
            }
        }
        for (std::size_t r = 0; r < n_; ++r) {
            const Vertex root = static_cast<Vertex>(r);
            if (match_[root] != kNoVertex || g_.degree(root) == 0) continue;
            Vertex v = find_path(root);
            while (v != kNoVertex) {
                const Vertex pv = parent_[v];
                const Vertex ppv = match_[pv];
                match_[v] = pv;
                match_[pv] = v;
                v = ppv;
            }
        }
        return match_;
    }

private:
    Vertex lca(Vertex a, Vertex b) {
        std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
        for (;;) {
            a = base_[a];
            lca_mark_[a] = 1;
            if (match_[a] == kNoVertex) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (lca_mark_[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    Vertex find_path(Vertex root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kNoVertex);
        std::iota(base_.begin(), base_.end(), Vertex{0});
        used_[root] = 1;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (const auto& nb : g_.neighbors(v)) {
                const Vertex to = nb.v;
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != kNoVertex && parent_[match_[to]] != kNoVertex)) {
                    const Vertex cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(static_cast<Vertex>(i));
                            }
                        }
                    }
                } else if (parent_[to] == kNoVertex) {
                    parent_[to] = v;
                    if (match_[to] == kNoVertex) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return kNoVertex;
    }

    const WeightedGraph& g_;
    std::size_t n_;
    std::vector<Vertex> match_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> used_;
    std::vector<char> in_blossom_;
    std::vector<char> lca_mark_;
};

// Edge indices by |w| descending, ties by index (canonical (u, v) order). The
// keys are self-contained so the sort never chases pointers back into `edges`.
std::vector<GreedyKey> greedy_order(std::span<const Edge> edges) {
    std::vector<GreedyKey> keys(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) keys[i] = {std::abs(edges[i].w), edges[i].u, edges[i].v};
    std::sort(keys.begin(), keys.end(), [](const GreedyKey& a, const GreedyKey& b) {
        if (a.abs_w != b.abs_w) return a.abs_w > b.abs_w;
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    return keys;
}

}  // namespace

Matching greedy_sorted_matching(const WeightedGraph& g, std::vector<GreedyRound>* trace) {
    const auto edges = g.edges();
    const auto keys = greedy_order(edges);

    Matching m = empty_matching(g);
    if (trace == nullptr) {
        for (const GreedyKey& k : keys) {
            if (m.mate[k.u] == kNoVertex && m.mate[k.v] == kNoVertex) take(m, k.u, k.v, k.abs_w);
        }
        return m;
    }

    // Instrumented replay: attribute every edge to the round that removed it.
    trace->clear();
    std::vector<char> gone(edges.size(), 0);
    auto index_of = [&](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b}, [](const Edge& x, std::pair<Vertex, Vertex> key) {
            return x.u != key.first ? x.u < key.first : x.v < key.second;
        });
        return static_cast<std::size_t>(it - edges.begin());
    };
    for (const GreedyKey& k : keys) {
        const std::size_t idx = index_of(k.u, k.v);
        if (gone[idx]) continue;
        const auto& e = edges[idx];
        take(m, e.u, e.v, e.w);
        GreedyRound round{idx, {}};
        for (Vertex end : {e.u, e.v}) {
            for (const auto& nb : g.neighbors(end)) {
                const std::size_t j = index_of(end, nb.v);
                if (gone[j]) continue;
                gone[j] = 1;
                round.removed.push_back(j);
            }
        }
        std::sort(round.removed.begin(), round.removed.end());
        trace->push_back(std::move(round));
    }
    return m;
}

Matching maximal_matching(const WeightedGraph& g) {
    Matching m = empty_matching(g);
    for (const auto& e : g.edges()) {
        if (m.mate[e.u] == kNoVertex && m.mate[e.v] == kNoVertex) take(m, e.u, e.v, e.w);
    }
    return m;
}

Matching maximum_matching(const WeightedGraph& g) {
    const std::vector<Vertex> mate = Blossom(g).run();
    Matching m = empty_matching(g);
    for (std::size_t u = 0; u < g.n(); ++u) {
        const Vertex v = mate[u];
        if (v != kNoVertex && static_cast<Vertex>(u) < v) take(m, static_cast<Vertex>(u), v, *g.weight(static_cast<Vertex>(u), v));
    }
    return m;
}

void validate_matching(const WeightedGraph& g, const Matching& m) {
    if (m.mate.size() != g.n()) throw ValidationError("matching: mate array length mismatch");
    std::vector<char> seen(g.n(), 0);
    double w = 0.0;
    for (auto [u, v] : m.edges) {
        const auto a = g.weight(u, v);
        if (!a) throw ValidationError("matching: {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} is not an edge");
        if (seen[u] || seen[v]) throw ValidationError("matching: edges share a vertex");
        seen[u] = seen[v] = 1;
        if (m.mate[u] != v || m.mate[v] != u) throw ValidationError("matching: mate array inconsistent");
        w += std::abs(*a);
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (!seen[v] && m.mate[v] != kNoVertex) throw ValidationError("matching: stray mate entry");
    }
    if (std::abs(w - m.total_abs_weight) > kTolerance * std::max(1.0, w)) {
        throw ValidationError("matching: total weight mismatch");
    }
}

}  // namespace maxqp
