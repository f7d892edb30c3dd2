#pragma once

#include <optional>
#include <span>
#include <vector>

#include "maxqp/assignment.hpp"
#include "maxqp/graph.hpp"

namespace maxqp {

/// Scans vertices in id order and flips vertex i whenever the contribution z_i of
/// its back-edges {i,j}, j < i, is negative. The result has every z*_i >= 0 and
/// therefore value >= 0. O(n + m). Starts from all +1 when `start` is empty.
Assignment normalize_nonneg(const WeightedGraph& g, std::optional<std::span<const Spin>> start = {});

/// Same scan restricted to G[S] for S = `vertices`; returns spins on S only.
PartialSpins normalize_nonneg_on(const WeightedGraph& g, std::span<const Vertex> vertices);

/// Given spins x1 on V1 and x2 on V2 (supports of the two vectors, required
/// disjoint), returns x1 u x2 or (-x1) u x2, whichever has value >= z1 + z2 on
/// G[V1 u V2]. The unflipped union wins ties.
PartialSpins combine_disjoint(const WeightedGraph& g, std::span<const Spin> x1, std::span<const Spin> x2);

/// Completes spins on H (the support of `x`) to all of V with value >= val_x(G[H]).
Assignment extend_from_induced(const WeightedGraph& g, std::span<const Spin> x);

/// Incremental form of repeated combine_disjoint over a sequence of disjoint parts.
///
/// Each `add` costs O(sum of degrees in the part) rather than O(n + m): the new part
/// is flipped (equivalent up to global sign to flipping the accumulated side) when
/// its cross edges to the accumulated set contribute negatively.
class DisjointUnionBuilder {
public:
    explicit DisjointUnionBuilder(const WeightedGraph& g);

    /// `spins[i]` is the spin of `part[i]`. Throws ValidationError on overlap.
    void add(std::span<const Vertex> part, std::span<const Spin> spins);

    /// Value of the accumulated spins on G[union of parts].
    double value() const noexcept { return value_; }
    const PartialSpins& spins() const noexcept { return spins_; }
    PartialSpins release() && { return std::move(spins_); }

private:
    const WeightedGraph* g_;
    PartialSpins spins_;
    double value_ = 0.0;
};

}  // namespace maxqp
