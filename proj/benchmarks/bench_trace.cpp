#include "polyres/trace_engine.hpp"

#include <benchmark/benchmark.h>

using namespace polyres;

static void BM_WalkCount(benchmark::State& state) {
    // balanced 3x3 usage matrix with total 3*range edges
    const int w = static_cast<int>(state.range(0));
    ExponentMatrix e(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e.at(i, j) = (i == j) ? w : w / 2 + 1;
    // rebalance: make row sums equal column sums by construction (symmetric)
    for (auto _ : state) {
        Integer c = walk_count(e);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_WalkCount)->Arg(1)->Arg(2)->Arg(3);

static void BM_MultigradedTrace22(benchmark::State& state) {
    PolySystem quad = build_symbolic(2, {2, 2});
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MPoly t = multigraded_trace(quad, {k, k});
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_MultigradedTrace22)->Arg(1)->Arg(2);

static void BM_TraceDeepest222(benchmark::State& state) {
    PolySystem sys = build_symbolic(3, {2, 2, 2});
    for (auto _ : state) {
        MPoly t = multigraded_trace(sys, {4, 4, 4});
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TraceDeepest222)->Unit(benchmark::kMillisecond);

static void BM_NaiveOracle22(benchmark::State& state) {
    PolySystem quad = build_symbolic(2, {2, 2});
    for (auto _ : state) {
        MPoly t = naive_trace_oracle(quad, {1, 1});
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_NaiveOracle22);
