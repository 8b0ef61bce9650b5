#include <benchmark/benchmark.h>

#include <cmath>

#include "sinrsim/bounds.hpp"
#include "sinrsim/generators.hpp"
#include "sinrsim/sinr.hpp"
#include "sinrsim/witness.hpp"

using namespace sinrsim;

static void BM_BuildGraphGrid1D(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const NodeSet nodes = gen::grid_1d(n);
    const Coloring coloring = gen::regular_coloring_1d(n, k);
    const SinrParams params(2.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_graph(nodes, coloring, params, 1));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n * n));
}
BENCHMARK(BM_BuildGraphGrid1D)->Args({256, 3})->Args({1024, 3})->Args({4096, 3});

static void BM_BuildGraphGrid2D(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto side = static_cast<std::size_t>(std::lround(std::sqrt(double(n))));
    const int k = static_cast<int>(state.range(1));
    const NodeSet nodes = gen::grid_2d(n);
    const Coloring coloring = gen::regular_coloring_2d(side, k);
    const SinrParams params(2.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_graph(nodes, coloring, params, 1));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n * n));
}
BENCHMARK(BM_BuildGraphGrid2D)->Args({1024, 4})->Args({4096, 4});

static void BM_IsConnectedRandom1D(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const NodeSet nodes = gen::sample_uniform_1d({n, 7, 0});
    const Coloring coloring = gen::regular_coloring_1d(n, k);
    const SinrParams params(2.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_connected(nodes, coloring, params, 1));
    }
}
BENCHMARK(BM_IsConnectedRandom1D)->Args({1024, 4})->Args({1024, 16})->Args({4096, 24});

static void BM_GapDetector(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const NodeSet nodes = gen::sample_uniform_1d({n, 11, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::detect_gap_condition(nodes, 2, 1.0));
    }
}
BENCHMARK(BM_GapDetector)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_ExpSeqDetector(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const NodeSet nodes = gen::sample_uniform_1d({n, 13, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::detect_exponential_sequence(nodes, 0.1, 3));
    }
}
BENCHMARK(BM_ExpSeqDetector)->Arg(1024)->Arg(4096);

static void BM_ZetaUpper(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::zeta_upper(alpha));
    }
}
BENCHMARK(BM_ZetaUpper)->Arg(15)->Arg(20)->Arg(30);

BENCHMARK_MAIN();
