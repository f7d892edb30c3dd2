#include <vector>

#include "doctest.h"
#include "instances.hpp"
#include "maxqp/errors.hpp"
#include "maxqp/generate.hpp"
#include "maxqp/graph.hpp"
#include "oracles.hpp"

using namespace maxqp;
using namespace maxqp::testing;

TEST_CASE("load_graph merges symmetric entries by averaging") {
    const std::vector<Entry> same = {{0, 1, 1.0}, {1, 0, 1.0}};
    auto g = load_graph(2, same);
    REQUIRE(g.m() == 1);
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 1);
    CHECK(g.edges()[0].w == 1.0);

    const std::vector<Entry> cancel = {{0, 1, 1.0}, {1, 0, -1.0}};
    CHECK(load_graph(2, cancel).m() == 0);

    const std::vector<Entry> asym = {{0, 1, 3.0}, {1, 0, 1.0}};
    CHECK(load_graph(2, asym).weight(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("load_graph rejects self-loops and bad ids") {
    const std::vector<Entry> loop = {{2, 2, 5.0, 7}};
    try {
        load_graph(3, loop);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("line 7") != std::string::npos);
    }
    const std::vector<Entry> out = {{0, 5, 1.0, 3}};
    CHECK_THROWS_AS(load_graph(3, out), ParseError);
}

TEST_CASE("WeightedGraph validates its edges") {
    CHECK_THROWS_AS(make_graph(2, {{0, 1, 0.0}}), ValidationError);
    CHECK_THROWS_AS(make_graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(make_graph(2, {{0, 2, 1.0}}), ValidationError);
    CHECK_THROWS_AS(make_graph(2, {{1, 1, 1.0}}), ValidationError);

    auto g = make_graph(4, {{2, 0, 1.0}, {1, 3, -2.0}, {0, 1, 1.0}});
    CHECK_FALSE(g.is_unit());
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 1);
    CHECK(g.edges()[1].v == 2);
    CHECK(g.weight(3, 1) == -2.0);
    CHECK_FALSE(g.has_edge(2, 3));
    auto nb = g.neighbors(0);
    REQUIRE(nb.size() == 2);
    CHECK(nb[0].v == 1);
    CHECK(nb[1].v == 2);
}

TEST_CASE("stats on small named graphs") {
    auto tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    auto s = stats(tri);
    CHECK(s.max_degree == 2);
    CHECK(s.degeneracy == 2);
    CHECK(s.density() == 1.0);
    CHECK(s.abs_weight == 3.0);

    auto star = make_graph(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
    s = stats(star);
    CHECK(s.max_degree == 5);
    CHECK(s.degeneracy == 1);
    CHECK(s.density() == doctest::Approx(5.0 / 6.0));

    GeneratorSpec spec;
    spec.kind = GeneratorKind::grid_spin_glass;
    spec.rows = spec.cols = 4;
    CHECK(degeneracy(generate(spec)) == 2);
    CHECK(degeneracy(WeightedGraph()) == 0);
}

TEST_CASE("degeneracy agrees with naive peeling") {
    SplitMix64 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(rng, 1 + rng.below(25), static_cast<unsigned>(rng.below(60)), Weights::unit);
        CHECK(degeneracy(g) == naive_degeneracy(g));
    }
}

TEST_CASE("induced_subgraph keeps parent order and edges") {
    auto g = make_graph(5, {{0, 1, 1}, {1, 2, -1}, {2, 3, 2}, {3, 4, 1}, {0, 4, 3}});
    const std::vector<Vertex> pick = {4, 0, 2, 3};
    auto sub = induced_subgraph(g, pick);
    CHECK(sub.to_parent == std::vector<Vertex>{0, 2, 3, 4});
    CHECK(sub.graph.m() == 3);
    CHECK(sub.graph.weight(0, 3) == 3.0);
    CHECK(sub.graph.weight(1, 2) == 2.0);
    const std::vector<Vertex> dup = {1, 1};
    CHECK_THROWS_AS(induced_subgraph(g, dup), ValidationError);
}
