#include "maxqp/compose.hpp"

#include <algorithm>
#include <string>

#include "maxqp/errors.hpp"

namespace maxqp {

namespace {

// The left-to-right scan shared by the full and the restricted variant. `in_set`
// selects the vertices of the induced subgraph; `x` holds the starting spins.
void scan_nonneg(const WeightedGraph& g, std::span<const Vertex> order, const std::vector<char>& in_set,
                 std::vector<Spin>& x) {
    for (Vertex i : order) {
        double z = 0.0;
        for (const auto& nb : g.neighbors(i)) {
            if (nb.v >= i) break;  // sorted adjacency: remaining neighbors are later
            if (in_set[nb.v]) z += nb.w * x[i] * x[nb.v];
        }
        if (z < 0.0) x[i] = static_cast<Spin>(-x[i]);
    }
}

}  // namespace

Assignment normalize_nonneg(const WeightedGraph& g, std::optional<std::span<const Spin>> start) {
    std::vector<Spin> x(g.n(), Spin{1});
    if (start) {
        if (start->size() != g.n()) throw ValidationError("normalize_nonneg: start length mismatch");
        x.assign(start->begin(), start->end());
        for (Spin s : x) {
            if (s != 1 && s != -1) throw ValidationError("normalize_nonneg: start entry is not +1/-1");
        }
    }
    std::vector<Vertex> order(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) order[v] = static_cast<Vertex>(v);
    std::vector<char> all(g.n(), 1);
    scan_nonneg(g, order, all, x);
    return Assignment(g, std::move(x));
}

PartialSpins normalize_nonneg_on(const WeightedGraph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> order(vertices.begin(), vertices.end());
    std::sort(order.begin(), order.end());
    std::vector<char> in_set(g.n(), 0);
    PartialSpins x(g.n(), Spin{0});
    for (Vertex v : order) {
        in_set[v] = 1;
        x[v] = 1;
    }
    scan_nonneg(g, order, in_set, x);
    return x;
}

PartialSpins combine_disjoint(const WeightedGraph& g, std::span<const Spin> x1, std::span<const Spin> x2) {
    if (x1.size() != g.n() || x2.size() != g.n()) {
        throw ValidationError("combine_disjoint: partial assignment length mismatch");
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (x1[v] != 0 && x2[v] != 0) {
            throw ValidationError("combine_disjoint: vertex " + std::to_string(v + 1) + " in both sets");
        }
    }
    double cross = 0.0;
    for (const auto& e : g.edges()) {
        if (x1[e.u] != 0 && x2[e.v] != 0) cross += e.w * x1[e.u] * x2[e.v];
        else if (x2[e.u] != 0 && x1[e.v] != 0) cross += e.w * x2[e.u] * x1[e.v];
    }
    const Spin sign = cross < 0.0 ? Spin{-1} : Spin{1};
    PartialSpins out(g.n(), Spin{0});
    for (std::size_t v = 0; v < g.n(); ++v) out[v] = x1[v] != 0 ? static_cast<Spin>(sign * x1[v]) : x2[v];
    return out;
}

Assignment extend_from_induced(const WeightedGraph& g, std::span<const Spin> x) {
    if (x.size() != g.n()) throw ValidationError("extend_from_induced: length mismatch");
    std::vector<Vertex> rest;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (x[v] == 0) rest.push_back(static_cast<Vertex>(v));
    }
    if (rest.empty()) return Assignment(g, std::vector<Spin>(x.begin(), x.end()));
    PartialSpins x0 = normalize_nonneg_on(g, rest);
    PartialSpins combined = combine_disjoint(g, x0, x);
    return Assignment(g, std::move(combined));
}

DisjointUnionBuilder::DisjointUnionBuilder(const WeightedGraph& g) : g_(&g), spins_(g.n(), Spin{0}) {}

void DisjointUnionBuilder::add(std::span<const Vertex> part, std::span<const Spin> spins) {
    if (part.size() != spins.size()) throw ValidationError("DisjointUnionBuilder: size mismatch");
    for (Vertex v : part) {
        if (spins_[v] != 0) throw ValidationError("DisjointUnionBuilder: vertex " + std::to_string(v + 1) +
                                                  " already placed");
    }
    // Mark the new part with 2*spin so it is distinguishable from accumulated +-1.
    for (std::size_t i = 0; i < part.size(); ++i) spins_[part[i]] = static_cast<Spin>(2 * spins[i]);
    double inside = 0.0;
    double cross = 0.0;
    for (Vertex v : part) {
        const Spin sv = static_cast<Spin>(spins_[v] / 2);
        for (const auto& nb : g_->neighbors(v)) {
            const Spin su = spins_[nb.v];
            if (su == 2 || su == -2) {
                if (nb.v > v) inside += nb.w * sv * (su / 2);
            } else if (su != 0) {
                cross += nb.w * sv * su;
            }
        }
    }
    const int sign = cross < 0.0 ? -1 : 1;
    for (Vertex v : part) spins_[v] = static_cast<Spin>(sign * spins_[v] / 2);
    value_ += inside + sign * cross;
}

}  // namespace maxqp
