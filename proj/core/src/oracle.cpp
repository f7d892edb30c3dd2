#include "maxqp/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "maxqp/errors.hpp"

namespace maxqp {

Assignment brute_force(const WeightedGraph& g, std::size_t max_vertices) {
    const std::size_t n = g.n();
    if (n > max_vertices || n > 62) {
        throw CapacityError("brute force limited to " + std::to_string(max_vertices) + " vertices, instance has " +
                                std::to_string(n),
                            static_cast<int>(n));
    }
    if (n == 0) return Assignment(g, {});

    // Start from x_1 = +1, everything else -1. `key` orders assignments
    // lexicographically: bit (n-1-i) is set iff x_i = +1.
    std::vector<Spin> x(n, Spin{-1});
    x[0] = 1;
    std::vector<double> field(n, 0.0);
    for (const auto& e : g.edges()) {
        field[e.u] += e.w * x[e.v];
        field[e.v] += e.w * x[e.u];
    }
    double value = 0.0;
    for (const auto& e : g.edges()) value += e.w * x[e.u] * x[e.v];
    std::uint64_t key = std::uint64_t{1} << (n - 1);

    double best = value;
    std::uint64_t best_key = key;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < steps; ++k) {
        const Vertex v = static_cast<Vertex>(1 + std::countr_zero(k));
        value -= 2.0 * x[v] * field[v];
        const double change = -2.0 * x[v];
        x[v] = static_cast<Spin>(-x[v]);
        for (const auto& nb : g.neighbors(v)) field[nb.v] += nb.w * change;
        key ^= std::uint64_t{1} << (n - 1 - static_cast<std::size_t>(v));
        if (value > best || (value == best && key < best_key)) {
            best = value;
            best_key = key;
        }
    }
    std::vector<Spin> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ((best_key >> (n - 1 - i)) & 1) ? 1 : -1;
    return Assignment(g, std::move(out));
}

WeightedGraph subdivide_for_maxcut(const WeightedGraph& g) {
    const std::size_t n = g.n();
    std::vector<Edge> edges;
    edges.reserve(2 * g.m());
    Vertex next = static_cast<Vertex>(n);
    for (const auto& e : g.edges()) {
        edges.push_back({e.u, next, 1.0});  // e.u < e.v: lower-id endpoint takes +1
        edges.push_back({e.v, next, -1.0});
        ++next;
    }
    return WeightedGraph(n + g.m(), std::move(edges));
}

}  // namespace maxqp
