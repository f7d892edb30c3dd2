#include <algorithm>
#include <vector>

#include "doctest.h"
#include "instances.hpp"
#include "maxqp/errors.hpp"
#include "maxqp/matching.hpp"
#include "maxqp/packing.hpp"
#include "oracles.hpp"

using namespace maxqp;
using namespace maxqp::testing;

TEST_CASE("greedy picks the heaviest edge of a triangle") {
    auto g = make_graph(3, {{0, 1, 3}, {1, 2, -2}, {0, 2, 1}});
    auto m = greedy_sorted_matching(g);
    REQUIRE(m.size() == 1);
    CHECK(m.edges[0] == std::pair<Vertex, Vertex>{0, 1});
    CHECK(m.total_abs_weight == 3.0);
    CHECK(m.total_abs_weight >= 6.0 / (2 * 2));
}

TEST_CASE("greedy keeps a perfect matching whole") {
    auto g = make_graph(6, {{0, 1, 1}, {2, 3, -4}, {4, 5, 2}});
    auto m = greedy_sorted_matching(g);
    CHECK(m.size() == 3);
    CHECK(m.total_abs_weight == 7.0);
}

TEST_CASE("greedy ties fall back to lexicographic order") {
    auto g = make_graph(4, {{2, 3, 1}, {1, 2, -1}, {0, 1, 1}});
    auto m = greedy_sorted_matching(g);
    REQUIRE(m.size() == 2);
    CHECK(m.edges[0] == std::pair<Vertex, Vertex>{0, 1});
    CHECK(m.edges[1] == std::pair<Vertex, Vertex>{2, 3});
}

TEST_CASE("greedy bound and removal trace") {
    SplitMix64 rng(21);
    for (int t = 0; t < 150; ++t) {
        auto g = random_bounded_degree(rng, 5 + rng.below(40), 4, 120, Weights::real);
        std::vector<GreedyRound> trace;
        auto m = greedy_sorted_matching(g, &trace);
        validate_matching(g, m);
        const auto s = stats(g);
        if (s.max_degree > 0) CHECK(m.total_abs_weight >= s.abs_weight / (2.0 * s.max_degree) - kTolerance);

        REQUIRE(trace.size() == m.size());
        std::vector<int> seen(g.m(), 0);
        for (const auto& r : trace) {
            CHECK(r.removed.size() <= static_cast<std::size_t>(2 * s.max_degree));
            CHECK(std::find(r.removed.begin(), r.removed.end(), r.chosen) != r.removed.end());
            for (auto e : r.removed) {
                ++seen[e];
                CHECK(std::abs(g.edges()[e].w) <= std::abs(g.edges()[r.chosen].w));
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("maximal matching") {
    auto p3 = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
    auto m = maximal_matching(p3);
    REQUIRE(m.size() == 1);
    CHECK(m.edges[0] == std::pair<Vertex, Vertex>{0, 1});
    CHECK(maximal_matching(WeightedGraph(4, {})).size() == 0);

    SplitMix64 rng(22);
    for (int t = 0; t < 100; ++t) {
        auto g = random_graph(rng, 1 + rng.below(20), 25, Weights::unit);
        auto mm = maximal_matching(g);
        validate_matching(g, mm);
        for (const auto& e : g.edges()) CHECK((mm.is_matched(e.u) || mm.is_matched(e.v)));
    }
}

TEST_CASE("maximum matching on named graphs") {
    CHECK(maximum_matching(make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}})).size() == 2);
    CHECK(maximum_matching(make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})).size() == 1);
    // Two triangles joined by a path: needs a blossom to find the perfect matching.
    auto g = make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
    CHECK(maximum_matching(g).size() == 3);
}

TEST_CASE("maximum matching equals exhaustive maximum") {
    SplitMix64 rng(23);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(rng, 1 + rng.below(12), static_cast<unsigned>(10 + rng.below(50)), Weights::unit);
        auto m = maximum_matching(g);
        validate_matching(g, m);
        CHECK(static_cast<int>(m.size()) == exhaustive_max_matching(g));
        CHECK(m.size() >= maximal_matching(g).size());
        CHECK(2 * maximal_matching(g).size() >= greedy_sorted_matching(g).size());
    }
}

TEST_CASE("validate_matching catches breaches") {
    auto g = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
    Matching m;
    m.edges = {{0, 1}, {1, 2}};
    m.mate = {1, 2, 1};
    m.total_abs_weight = 2;
    CHECK_THROWS_AS(validate_matching(g, m), ValidationError);
    Matching bad;
    bad.edges = {{0, 2}};
    bad.mate = {2, kNoVertex, 0};
    CHECK_THROWS_AS(validate_matching(g, bad), ValidationError);
}

TEST_CASE("matching_to_solution reaches w(M)") {
    auto neg = make_graph(2, {{0, 1, -1}});
    auto a = matching_to_solution(neg, greedy_sorted_matching(neg));
    CHECK(a[0] != a[1]);
    CHECK(a.value() == 1.0);

    auto two = make_graph(4, {{0, 1, 2}, {2, 3, -3}});
    CHECK(matching_to_solution(two, greedy_sorted_matching(two)).value() >= 5.0);

    SplitMix64 rng(24);
    for (int t = 0; t < 150; ++t) {
        auto g = random_graph(rng, 2 + rng.below(11), 40, Weights::real);
        auto m = t % 2 ? maximal_matching(g) : greedy_sorted_matching(g);
        CHECK(matching_to_solution(g, m).value() >= m.total_abs_weight - kTolerance);
    }
}
