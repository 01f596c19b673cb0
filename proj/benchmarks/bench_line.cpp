#include <benchmark/benchmark.h>

#include "bsg/line_solver.hpp"

static void BM_ComputeHW(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        auto b = bsg::compute_hw(n, 4);
        benchmark::DoNotOptimize(b.w);
    }
}
BENCHMARK(BM_ComputeHW)->Arg(100)->Arg(100000)->Arg(100000000)->Arg(1LL << 40);

static void BM_SampleSeeker(benchmark::State& state) {
    long long n = state.range(0);
    long long t = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bsg::sample_seeker(n, 4, t));
        t = (t + 7) % bsg::compute_hw(n, 4).w;
    }
}
BENCHMARK(BM_SampleSeeker)->Arg(100000)->Arg(100000000);

static void BM_GameValueLine(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        auto sol = bsg::game_value_line(n, 3);
        benchmark::DoNotOptimize(sol.value);
    }
}
BENCHMARK(BM_GameValueLine)->Arg(11)->Arg(101)->Arg(1001);

static void BM_SegmentHider(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        auto [y, layout] = bsg::hider_coprime(n, 4);
        benchmark::DoNotOptimize(layout.segments.size());
    }
}
BENCHMARK(BM_SegmentHider)->Arg(38)->Arg(388)->Arg(3888);
