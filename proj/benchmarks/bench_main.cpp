#include <benchmark/benchmark.h>

#include "orthospin/appendix_checks.hpp"
#include "orthospin/branching.hpp"
#include "orthospin/free_energy.hpp"
#include "orthospin/spectra.hpp"

using namespace orthospin;

static void BM_EnumeratePn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_Pn(n, 3));
}
BENCHMARK(BM_EnumeratePn)->Arg(6)->Arg(10)->Arg(14);

static void BM_ZDecomposed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(z_decomposed(n, 3, 0.7, -0.4, 0.3));
}
BENCHMARK(BM_ZDecomposed)->Arg(6)->Arg(12);

static void BM_ZDirect(benchmark::State& state) {
    HamiltonianSpec spec;
    spec.theta = 2;
    spec.n = static_cast<int>(state.range(0));
    spec.L1 = 0.7;
    spec.L2 = -0.4;
    for (auto _ : state) benchmark::DoNotOptimize(z_direct(spec));
}
BENCHMARK(BM_ZDirect)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_MaximizePhi(benchmark::State& state) {
    const int theta = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(maximize_phi(theta, 1.3, 0.8));
}
BENCHMARK(BM_MaximizePhi)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_CertifySmall(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(certify_positive(0.2, 0.3, 30));
}
BENCHMARK(BM_CertifySmall)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
