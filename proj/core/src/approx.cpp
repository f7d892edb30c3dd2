#include "maxqp/approx.hpp"

#include <cmath>
#include <stdexcept>

#include "maxqp/errors.hpp"
#include "maxqp/matching.hpp"
#include "maxqp/packing.hpp"

namespace maxqp {

namespace {

// Drivers re-check the inequality chain their guarantee rests on.
void require(bool ok, const std::string& what) {
    if (!ok) throw InternalError("certificate violated: " + what);
}

}  // namespace

double ApproxResult::cert(const std::string& name) const {
    for (const auto& c : certificate) {
        if (c.name == name) return c.value;
    }
    throw std::out_of_range("no certificate entry '" + name + "'");
}

ApproxResult solve_bounded_degree(const WeightedGraph& g) {
    // Only the degree and weight terms are needed; the degeneracy pass would be wasted here.
    InstanceStats s;
    for (const auto& e : g.edges()) s.abs_weight += std::abs(e.w);
    s.max_degree = max_degree(g);
    const Matching m = greedy_sorted_matching(g);
    ApproxResult r;
    r.assignment = matching_to_solution(g, m);
    r.value = r.assignment.value();
    if (s.max_degree == 0) {
        r.guarantee = 1.0;
        r.guarantee_expr = "1";
    } else {
        r.guarantee = 1.0 / (2.0 * s.max_degree);
        r.guarantee_expr = "1/(2*" + std::to_string(s.max_degree) + ")";
    }
    r.certificate = {{"matching_weight", m.total_abs_weight},
                     {"abs_weight", s.abs_weight},
                     {"max_degree", static_cast<double>(s.max_degree)}};
    const double tol = kTolerance * (1.0 + s.abs_weight);
    require(r.value >= m.total_abs_weight - tol, "value >= w(M)");
    require(s.max_degree == 0 || m.total_abs_weight >= s.abs_weight / (2.0 * s.max_degree) - tol,
            "w(M) >= ||A|| / (2 maxdeg)");
    return r;
}

ApproxResult solve_degenerate(const WeightedGraph& g) {
    const InstanceStats s = stats(g);
    const EasyPacking p = easypack(g);
    ApproxResult r;
    r.assignment = packing_to_solution(g, p);
    r.value = r.assignment.value();
    if (s.degeneracy == 0) {
        r.guarantee = 1.0;
        r.guarantee_expr = "1";
    } else {
        r.guarantee = 1.0 / (2.0 * s.degeneracy);
        r.guarantee_expr = "1/(2*" + std::to_string(s.degeneracy) + ")";
    }
    r.certificate = {{"packed_vertices", static_cast<double>(p.covered)},
                     {"packed_edges", static_cast<double>(p.edge_count)},
                     {"degeneracy", static_cast<double>(s.degeneracy)}};
    require(r.value + kTolerance >= static_cast<double>(p.edge_count), "value >= m(F)");
    require(2 * p.edge_count >= p.covered, "m(F) >= |V_F| / 2");
    return r;
}

ApproxResult solve_dense(const WeightedGraph& g) {
    const EasyPacking p = star_packing(g);
    std::size_t active = 0;
    for (std::size_t v = 0; v < g.n(); ++v) active += g.degree(static_cast<Vertex>(v)) > 0 ? 1 : 0;
    ApproxResult r;
    r.assignment = packing_to_solution(g, p);
    r.value = r.assignment.value();
    const double m = static_cast<double>(g.m());
    if (g.m() == 0) {
        r.guarantee = 1.0;
        r.guarantee_expr = "1";
    } else {
        // 1 / (3 delta) with delta = m / active.
        r.guarantee = static_cast<double>(active) / (3.0 * m);
        r.guarantee_expr = std::to_string(active) + "/(3*" + std::to_string(g.m()) + ")";
    }
    r.certificate = {{"packed_edges", static_cast<double>(p.edge_count)},
                     {"edges", m},
                     {"density", active == 0 ? 0.0 : m / static_cast<double>(active)}};
    require(r.value + kTolerance >= static_cast<double>(p.edge_count), "value >= m(F)");
    require(3 * p.edge_count >= active, "m(F) >= m / (3 delta)");
    return r;
}

}  // namespace maxqp
