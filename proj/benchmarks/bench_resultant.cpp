#include "polyres/resultant.hpp"

#include <benchmark/benchmark.h>

using namespace polyres;

static void BM_ResultantSymbolic(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    PolySystem sys = build_symbolic(2, {r, r});
    for (auto _ : state) {
        ResultantResult out = resultant(sys);
        benchmark::DoNotOptimize(out.term_count);
    }
    state.SetLabel("degrees [" + std::to_string(r) + "," + std::to_string(r) + "]");
}
BENCHMARK(BM_ResultantSymbolic)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_NumericProbe222(benchmark::State& state) {
    PolySystem sys = random_numeric_system(3, {2, 2, 2}, 42);
    for (auto _ : state) {
        Rational v = solvability_probe(sys);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_NumericProbe222)->Unit(benchmark::kMillisecond);

static void BM_SylvesterSymbolic(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    PolySystem sys = build_symbolic(2, {r, r});
    for (auto _ : state) {
        MPoly s = sylvester_resultant(sys.poly(0), sys.poly(1));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SylvesterSymbolic)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
