#include "maxqp/assignment.hpp"

#include <string>

#include "maxqp/errors.hpp"

namespace maxqp {

double evaluate(const WeightedGraph& g, std::span<const Spin> x) {
    if (x.size() != g.n()) {
        throw ValidationError("assignment has " + std::to_string(x.size()) + " entries, instance has " +
                              std::to_string(g.n()) + " vertices");
    }
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (x[v] != 1 && x[v] != -1) {
            throw ValidationError("assignment entry " + std::to_string(v + 1) + " is not +1/-1");
        }
    }
    double total = 0.0;
    for (const auto& e : g.edges()) total += e.w * x[e.u] * x[e.v];
    return total;
}

double evaluate_partial(const WeightedGraph& g, std::span<const Spin> x) {
    if (x.size() != g.n()) throw ValidationError("partial assignment length mismatch");
    double total = 0.0;
    for (const auto& e : g.edges()) total += e.w * x[e.u] * x[e.v];
    return total;
}

Assignment::Assignment(const WeightedGraph& g, std::vector<Spin> spins)
    : spins_(std::move(spins)), value_(evaluate(g, spins_)) {}

Assignment Assignment::all_plus(const WeightedGraph& g) {
    return Assignment(g, std::vector<Spin>(g.n(), Spin{1}));
}

}  // namespace maxqp
