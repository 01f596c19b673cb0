#include <benchmark/benchmark.h>

#include "bsg/equilibrium.hpp"
#include "bsg/oracle.hpp"

static void BM_BestResponsePath(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int k = static_cast<int>(state.range(1));
    auto inst = bsg::TreeInstance::path(n, k);
    auto y = bsg::HiderDistribution::uniform(n);
    for (auto _ : state) {
        auto br = bsg::best_response_dp(inst, y);
        benchmark::DoNotOptimize(br.value);
    }
}
BENCHMARK(BM_BestResponsePath)->Args({16, 3})->Args({64, 4})->Args({64, 6})->Args({256, 6});

static void BM_SolveEquilibriumPath(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto inst = bsg::TreeInstance::path(n, 3);
    for (auto _ : state) {
        auto eq = bsg::solve_equilibrium(inst);
        benchmark::DoNotOptimize(eq.value);
    }
}
BENCHMARK(BM_SolveEquilibriumPath)->Arg(11)->Arg(16)->Arg(24);

static void BM_LineValueOracle(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        auto res = bsg::full_matrix_value_line(n, 3);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(BM_LineValueOracle)->Arg(12)->Arg(24)->Arg(40);
