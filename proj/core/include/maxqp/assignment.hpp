#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "maxqp/graph.hpp"

namespace maxqp {

using Spin = std::int8_t;

/// Spins over a subset of V, indexed by vertex; 0 marks a vertex outside the subset.
using PartialSpins = std::vector<Spin>;

/// val_x(G) = sum over stored edges {u,v} of a_{u,v} x_u x_v.
///
/// This is the single-counted edge sum, i.e. half of the double sum x^T A x.
/// Throws ValidationError if the length differs from n or an entry is not +-1.
double evaluate(const WeightedGraph& g, std::span<const Spin> x);

/// val on G[S] where S is the support of `x` (entries equal to 0 are outside S).
double evaluate_partial(const WeightedGraph& g, std::span<const Spin> x);

/// A complete +-1 labeling together with its cached objective value.
class Assignment {
public:
    Assignment() = default;

    /// Validates and evaluates `spins` against `g`.
    Assignment(const WeightedGraph& g, std::vector<Spin> spins);

    static Assignment all_plus(const WeightedGraph& g);

    const std::vector<Spin>& spins() const noexcept { return spins_; }
    double value() const noexcept { return value_; }
    std::size_t size() const noexcept { return spins_.size(); }
    Spin operator[](std::size_t v) const noexcept { return spins_[v]; }

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<Spin> spins_;
    double value_ = 0.0;
};

}  // namespace maxqp
