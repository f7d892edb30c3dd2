// Microbenchmarks for the main solver paths. Instances come from the built-in
// generators with fixed seeds so runs are comparable across builds.
#include <benchmark/benchmark.h>

#include "maxqp/approx.hpp"
#include "maxqp/generate.hpp"
#include "maxqp/matching.hpp"
#include "maxqp/oracle.hpp"
#include "maxqp/packing.hpp"
#include "maxqp/schemes.hpp"
#include "maxqp/treewidth.hpp"

namespace {

using namespace maxqp;

WeightedGraph sparse(std::size_t n, std::size_t m) {
    GeneratorSpec s;
    s.kind = GeneratorKind::sparse_random;
    s.n = n;
    s.m = m;
    s.weights = WeightMode::real;
    s.seed = 7;
    return generate(s);
}

WeightedGraph grid(std::size_t rows, std::size_t cols) {
    GeneratorSpec s;
    s.kind = GeneratorKind::grid_spin_glass;
    s.rows = rows;
    s.cols = cols;
    s.weights = WeightMode::real;
    s.seed = 7;
    return generate(s);
}

void BM_GreedyMatching(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = sparse(n, 2 * n);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_sorted_matching(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyMatching)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_BoundedDegree(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = sparse(n, 2 * n);
    for (auto _ : state) benchmark::DoNotOptimize(solve_bounded_degree(g).value);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BoundedDegree)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_MaximumMatching(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = sparse(n, 2 * n);
    for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g));
}
BENCHMARK(BM_MaximumMatching)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EasyPack(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = sparse(n, 3 * n);
    for (auto _ : state) benchmark::DoNotOptimize(packing_to_solution(g, easypack(g)).value());
}
BENCHMARK(BM_EasyPack)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_StarPack(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = sparse(n, 3 * n);
    for (auto _ : state) benchmark::DoNotOptimize(packing_to_solution(g, star_packing(g)).value());
}
BENCHMARK(BM_StarPack)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
    const auto g = grid(static_cast<std::size_t>(state.range(0)), 40);
    for (auto _ : state) benchmark::DoNotOptimize(to_nice(build_decomposition(g)));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TreewidthDP(benchmark::State& state) {
    const auto g = grid(static_cast<std::size_t>(state.range(0)), 40);
    const auto ntd = to_nice(build_decomposition(g));
    for (auto _ : state) benchmark::DoNotOptimize(solve_treewidth(g, ntd).value());
}
BENCHMARK(BM_TreewidthDP)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Baker(benchmark::State& state) {
    const auto g = grid(30, 30);
    const double eps = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_baker(g, eps).value);
}
BENCHMARK(BM_Baker)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PartitionScheme(benchmark::State& state) {
    const auto g = grid(20, 20);
    for (auto _ : state) benchmark::DoNotOptimize(solve_partition_scheme(g, 1.0).value);
}
BENCHMARK(BM_PartitionScheme)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = sparse(n, 2 * n);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force(g).value());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForce)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
