#include <benchmark/benchmark.h>

#include "pms/constructions.hpp"
#include "pms/factorisation.hpp"
#include "pms/matching.hpp"
#include "pms/search.hpp"
#include "pms/zonal.hpp"

using namespace pms;

static void BM_AllMatchings(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(all_matchings(n));
}
BENCHMARK(BM_AllMatchings)->Arg(5)->Arg(6)->Arg(7);

static void BM_ZonalTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zonal_table(n));
}
BENCHMARK(BM_ZonalTable)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CheckByDefinition(benchmark::State& state) {
    const MatchingSet agl = agl11_factorisation();
    const Partition lambda{4, 2};
    for (auto _ : state) benchmark::DoNotOptimize(check_by_definition(agl, lambda));
}
BENCHMARK(BM_CheckByDefinition)->Unit(benchmark::kMillisecond);

static void BM_DualDistribution(benchmark::State& state) {
    const ZonalTable table = zonal_table(6);
    const MatchingSet agl = agl11_factorisation();
    for (auto _ : state) {
        MatchingSet copy = agl;  // drop the cache
        benchmark::DoNotOptimize(copy.dual_distribution(table));
    }
}
BENCHMARK(BM_DualDistribution)->Unit(benchmark::kMillisecond);

static void BM_SolveUnsat(benchmark::State& state) {
    const ConstraintSystem sys = build_system(4, Partition{2, 1, 1}, 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve(sys));
}
BENCHMARK(BM_SolveUnsat)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
