#include <benchmark/benchmark.h>

#include "nlsphere/spectrum.hpp"

using namespace nlsphere;

static void BM_EigenvalueRecurrence(benchmark::State& state)
{
    const KernelParams params(-0.5, 1.0);
    const int ell = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalue(ell, params, EvalMethod::recurrence()));
}
BENCHMARK(BM_EigenvalueRecurrence)->Arg(10)->Arg(50)->Arg(200)->Arg(1000);

static void BM_EigenvalueAsymptotic(benchmark::State& state)
{
    const KernelParams params(-0.5, 1.0);
    const int ell = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalue(ell, params, EvalMethod::asymptotic()));
}
BENCHMARK(BM_EigenvalueAsymptotic)->Arg(50)->Arg(200)->Arg(1000);

static void BM_Spectrum(benchmark::State& state)
{
    const KernelParams params(0.0, 1.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_spectrum(n, params));
}
BENCHMARK(BM_Spectrum)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
