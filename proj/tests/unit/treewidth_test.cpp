#include <algorithm>
#include <chrono>
#include <vector>

#include "doctest.h"
#include "instances.hpp"
#include "maxqp/errors.hpp"
#include "maxqp/generate.hpp"
#include "maxqp/oracle.hpp"
#include "maxqp/treewidth.hpp"
#include "oracles.hpp"

using namespace maxqp;
using namespace maxqp::testing;

namespace {

WeightedGraph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < static_cast<Vertex>(n); ++v) e.push_back({v, v + 1, 1});
    return make_graph(n, e);
}

double solve_dp(const WeightedGraph& g, int cap = kDefaultWidthCap) {
    auto td = build_decomposition(g, cap);
    validate_decomposition(g, td);
    auto ntd = to_nice(td);
    validate_nice(ntd);
    auto a = solve_treewidth(g, ntd, cap);
    CHECK(a.value() == evaluate(g, a.spins()));
    return a.value();
}

}  // namespace

TEST_CASE("min-fill widths on named graphs") {
    CHECK(build_decomposition(path(5)).width() == 1);
    CHECK(build_decomposition(make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})).width() == 2);
    GeneratorSpec spec;
    spec.kind = GeneratorKind::grid_spin_glass;
    spec.rows = spec.cols = 4;
    auto grid = generate(spec);
    auto td = build_decomposition(grid);
    validate_decomposition(grid, td);
    CHECK(td.width() <= 4);
}

TEST_CASE("width cap raises CapacityError with the achieved width") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::grid_spin_glass;
    spec.rows = spec.cols = 5;
    auto grid = generate(spec);
    try {
        build_decomposition(grid, 2);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(e.achieved() > 2);
    }
    auto ntd = to_nice(build_decomposition(grid));
    CHECK_THROWS_AS(solve_treewidth(grid, ntd, 2), CapacityError);
}

TEST_CASE("to_nice on a single edge bag and a star") {
    auto edge = make_graph(2, {{0, 1, 1}});
    TreeDecomposition td;
    td.bags = {{0, 1}};
    td.parent = {-1};
    td.root = 0;
    validate_decomposition(edge, td);
    auto ntd = to_nice(td);
    validate_nice(ntd);
    CHECK(ntd.nodes.front().kind == NiceKind::leaf);
    CHECK(ntd.nodes[1].kind == NiceKind::introduce);
    CHECK(ntd.nodes[ntd.root].bag.empty());
    CHECK(ntd.width() == 1);

    auto star = make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    TreeDecomposition sd;
    sd.bags = {{0, 1}, {0, 2}, {0, 3}};
    sd.parent = {-1, 0, 0};
    sd.root = 0;
    auto sn = to_nice(sd);
    validate_nice(sn);
    CHECK(sn.width() == 1);
    CHECK(std::any_of(sn.nodes.begin(), sn.nodes.end(), [](const NiceNode& n) { return n.kind == NiceKind::join; }));
    CHECK(solve_treewidth(star, sn).value() == 3.0);
}

TEST_CASE("invalid decompositions are rejected") {
    auto g = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    TreeDecomposition missing_edge;
    missing_edge.bags = {{0, 1}, {1, 2}};
    missing_edge.parent = {-1, 0};
    missing_edge.root = 0;
    CHECK_THROWS_AS(validate_decomposition(g, missing_edge), ValidationError);
    // to_nice accepts the tree, but the DP notices edge {0,2} is never seen.
    CHECK_THROWS_AS(solve_treewidth(g, to_nice(missing_edge)), ValidationError);

    TreeDecomposition broken_trace;
    broken_trace.bags = {{0, 1}, {1, 2}, {0, 2}};
    broken_trace.parent = {-1, 0, 1};
    broken_trace.root = 0;
    CHECK_THROWS_AS(validate_decomposition(g, broken_trace), ValidationError);
    CHECK_THROWS_AS(to_nice(broken_trace), ValidationError);

    TreeDecomposition cyclic;
    cyclic.bags = {{0, 1, 2}, {0, 1, 2}};
    cyclic.parent = {1, 0};
    cyclic.root = 0;
    CHECK_THROWS_AS(to_nice(cyclic), ValidationError);
}

TEST_CASE("DP on named instances") {
    auto edge = make_graph(2, {{0, 1, 1}});
    auto a = solve_treewidth(edge, to_nice(build_decomposition(edge)));
    CHECK(a.value() == 1.0);
    CHECK(a[0] == a[1]);
    CHECK(solve_dp(make_graph(3, {{0, 1, 1}, {1, 2, -1}})) == 2.0);
    CHECK(solve_exact_auto(WeightedGraph(4, {})).value() == 0.0);
    CHECK(solve_exact_auto(WeightedGraph()).value() == 0.0);
}

TEST_CASE("DP equals the exhaustive optimum") {
    SplitMix64 rng(41);
    for (int t = 0; t < 150; ++t) {
        const auto w = t % 3 == 0 ? Weights::real : (t % 3 == 1 ? Weights::unit : Weights::integer);
        auto g = random_partial_ktree(rng, 1 + rng.below(13), 1 + static_cast<int>(rng.below(5)), 75, w);
        const double dp = solve_dp(g);
        const double ex = exhaustive_opt(g);
        if (w == Weights::real) {
            CHECK(std::abs(dp - ex) <= 1e-9);
        } else {
            CHECK(dp == ex);
        }
    }
}

TEST_CASE("DP is invariant under edge order and disconnected inputs") {
    SplitMix64 rng(42);
    for (int t = 0; t < 50; ++t) {
        auto g = random_graph(rng, 4 + rng.below(10), 20, Weights::integer);
        std::vector<Edge> shuffled(g.edges().begin(), g.edges().end());
        for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        for (auto& e : shuffled)
            if (rng.coin()) std::swap(e.u, e.v);
        auto h = make_graph(g.n(), shuffled);
        CHECK(solve_dp(g) == solve_dp(h));
    }
}

TEST_CASE("join nodes subtract the bag value once") {
    // Two triangles sharing edge {0,1}: the decomposition {0,1,2}-{0,1,3} forces a
    // join over bag {0,1} once made nice with both triangles below the root.
    auto g = make_graph(4, {{0, 1, -2}, {0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {1, 3, -1}});
    TreeDecomposition td;
    td.bags = {{0, 1}, {0, 1, 2}, {0, 1, 3}};
    td.parent = {-1, 0, 0};
    td.root = 0;
    validate_decomposition(g, td);
    auto ntd = to_nice(td);
    CHECK(std::any_of(ntd.nodes.begin(), ntd.nodes.end(), [](const NiceNode& n) { return n.kind == NiceKind::join; }));
    CHECK(solve_treewidth(g, ntd).value() == exhaustive_opt(g));
}

TEST_CASE("trees reach the sum of absolute weights") {
    SplitMix64 rng(43);
    auto tree = random_tree(rng, 1000, Weights::real);
    const auto start = std::chrono::steady_clock::now();
    auto a = solve_exact_auto(tree);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(a.value() == doctest::Approx(stats(tree).abs_weight).epsilon(1e-12));
    CHECK(secs < 1.0);
}

TEST_CASE("solve_exact_auto falls back to brute force past the cap") {
    SplitMix64 rng(44);
    auto dense = random_graph(rng, 12, 90, Weights::integer);
    CHECK(solve_exact_auto(dense, 3).value() == exhaustive_opt(dense));
    auto big = random_graph(rng, 40, 60, Weights::unit);
    CHECK_THROWS_AS(solve_exact_auto(big, 3, 24), CapacityError);

    GeneratorSpec spec;
    spec.kind = GeneratorKind::grid_spin_glass;
    spec.rows = spec.cols = 5;
    spec.seed = 9;
    auto grid = generate(spec);
    CHECK(solve_exact_auto(grid).value() == brute_force(grid).value());
}
