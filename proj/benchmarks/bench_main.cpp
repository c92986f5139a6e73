#include <benchmark/benchmark.h>

#include "graphring/consum.hpp"
#include "graphring/homology.hpp"
#include "graphring/intersection.hpp"
#include "graphring/randgen.hpp"
#include "graphring/trivector.hpp"

using namespace graphring;

static void BM_rref(benchmark::State& state) {
    SplitMix64 rng(1);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Rational(rng.range(-9, 9), rng.range(1, 9));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_h1_pipeline(benchmark::State& state) {
    TreeBounds bounds;
    bounds.max_nodes = static_cast<std::size_t>(state.range(0));
    PlumbingGraph g = random_connected_graph(3, bounds, 3);
    for (auto _ : state) {
        H1Basis basis = h1_basis(g);
        auto surfaces = kernel_surfaces(g, basis);
        benchmark::DoNotOptimize(product_table(g, basis, surfaces));
    }
}
BENCHMARK(BM_h1_pipeline)->Arg(6)->Arg(12);

static void BM_theorem_5_3(benchmark::State& state) {
    TreeBounds bounds;
    bounds.orientable_only = true;
    PlumbingGraph g = random_tree(5, bounds);
    for (auto _ : state) benchmark::DoNotOptimize(check_theorem_5_3(g));
}
BENCHMARK(BM_theorem_5_3);

static void BM_rank3_split(benchmark::State& state) {
    SplitMix64 rng(2);
    Form3 base(6);
    base.add(0, 1, 2, 1);
    base.add(3, 4, 5, 1);
    Form3 w = basis_change(base, random_invertible_matrix(rng, 6, 3));
    for (auto _ : state) benchmark::DoNotOptimize(rank3_split_dim6(w));
}
BENCHMARK(BM_rank3_split);

static void BM_basis_change_dim6(benchmark::State& state) {
    SplitMix64 rng(4);
    Form3 w(6);
    for (int t = 0; t < 10; ++t)
        w.add(rng.bounded(6), rng.bounded(6), rng.bounded(6), rng.range(-5, 5));
    RatMatrix n = random_invertible_matrix(rng, 6, 3);
    for (auto _ : state) benchmark::DoNotOptimize(basis_change(w, n));
}
BENCHMARK(BM_basis_change_dim6);

BENCHMARK_MAIN();
