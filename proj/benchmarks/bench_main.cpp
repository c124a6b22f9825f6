#include "quatcong/congruence.hpp"

#include <benchmark/benchmark.h>

using namespace quatcong;

static void BM_ClassSet(benchmark::State& state) {
    const QuaternionAlgebra alg = build_algebra(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(class_set(alg));
}
BENCHMARK(BM_ClassSet)->Arg(11)->Arg(105)->Arg(231)->Unit(benchmark::kMillisecond);

static void BM_BrandtMatrices(benchmark::State& state) {
    const long n = state.range(0);
    const ClassSet cs = class_set(build_algebra(n));
    const auto primes = hecke_primes(n, sturm_bound(n));
    for (auto _ : state) benchmark::DoNotOptimize(brandt_matrices(cs, primes));
}
BENCHMARK(BM_BrandtMatrices)->Arg(105)->Arg(231)->Unit(benchmark::kMillisecond);

static void BM_Mod2Systems(benchmark::State& state) {
    const LevelData d = compute_level(state.range(0));
    const IntegralLattice full = full_lattice(d.classes.size());
    for (auto _ : state) benchmark::DoNotOptimize(mod2_eigensystems(full, d.brandt));
}
BENCHMARK(BM_Mod2Systems)->Arg(105)->Arg(231)->Arg(442)->Unit(benchmark::kMillisecond);

static void BM_VerifyThm2(benchmark::State& state) {
    const LevelData d = compute_level(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_thm2(d));
}
BENCHMARK(BM_VerifyThm2)->Arg(105)->Arg(231)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
