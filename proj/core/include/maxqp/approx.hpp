#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxqp/assignment.hpp"
#include "maxqp/graph.hpp"

namespace maxqp {

/// Named bound quantity a solver reports to justify its guarantee.
struct CertificateEntry {
    std::string name;
    double value;
};

struct ApproxResult {
    Assignment assignment;
    double value = 0.0;
    /// Claimed factor: value >= guarantee * opt(G). In [0, 1].
    double guarantee = 1.0;
    /// Human-readable form of the guarantee, e.g. "1/(2*4)".
    std::string guarantee_expr;
    std::vector<CertificateEntry> certificate;

    /// Certificate lookup by name; throws std::out_of_range when absent.
    double cert(const std::string& name) const;
};

/// Greedy sorted matching, then matching_to_solution. value >= ||A|| / (2 maxdeg).
ApproxResult solve_bounded_degree(const WeightedGraph& g);

/// EasyPack, then packing_to_solution. Unit instances. value >= opt / (2 d).
ApproxResult solve_degenerate(const WeightedGraph& g);

/// Star packing, then packing_to_solution. Unit instances. value >= m / (3 delta)
/// where delta is the density after dropping isolated vertices.
ApproxResult solve_dense(const WeightedGraph& g);

}  // namespace maxqp
