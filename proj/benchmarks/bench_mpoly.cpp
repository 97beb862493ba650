#include "polyres/mpoly.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace polyres;

namespace {

MPoly dense_poly(int nsyms, int nterms, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Symbol> pool;
    for (int i = 1; i <= nsyms; ++i) pool.push_back(Symbol::coeff(1, {i}));
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> coef(-9, 9);
    MPoly out;
    for (int t = 0; t < nterms; ++t) {
        std::vector<Monomial::Factor> factors;
        for (Symbol s : pool) {
            int e = expo(rng);
            if (e > 0) factors.push_back({s, static_cast<unsigned>(e)});
        }
        out.add_term(Monomial::from_factors(std::move(factors)), Rational(coef(rng)));
    }
    return out;
}

} // namespace

static void BM_MPolyMultiply(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    MPoly a = dense_poly(6, terms, 1);
    MPoly b = dense_poly(6, terms, 2);
    for (auto _ : state) {
        MPoly c = a * b;
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * terms * terms);
}
BENCHMARK(BM_MPolyMultiply)->Arg(16)->Arg(64)->Arg(256);

static void BM_MPolyParsePrint(benchmark::State& state) {
    MPoly a = dense_poly(6, 128, 3);
    std::string text = a.to_string();
    for (auto _ : state) {
        MPoly p = MPoly::parse(text);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_MPolyParsePrint);
