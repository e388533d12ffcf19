#include <benchmark/benchmark.h>

#include "lensskein/lens/system.hpp"
#include "lensskein/trace/markov.hpp"

using namespace lensskein;

static void BM_ProjectLoopWord(benchmark::State& state) {
    const auto w = braid::parse_word("t^2 t1^-3 t2^2 g1 g2^-1 t3", 4);
    for (auto _ : state) benchmark::DoNotOptimize(hecke::project_braid(w));
}
BENCHMARK(BM_ProjectLoopWord)->Unit(benchmark::kMillisecond);

static void BM_TraceBandImage(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto w = braid::bbm(braid::LoopMonomial::from_exponents({k}), 1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(trace::trace_word(w));
}
BENCHMARK(BM_TraceBandImage)->DenseRange(1, 4);

static void BM_GenerateSystem(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lens::generate_system(3, k, braid::Side::Positive));
}
BENCHMARK(BM_GenerateSystem)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ReduceSystem(benchmark::State& state) {
    const auto b = lens::generate_system(3, static_cast<int>(state.range(0)), braid::Side::Positive);
    for (auto _ : state) benchmark::DoNotOptimize(lens::reduce_system(b));
}
BENCHMARK(BM_ReduceSystem)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
