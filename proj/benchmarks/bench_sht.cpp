#include <benchmark/benchmark.h>

#include "nlsphere/models.hpp"
#include "nlsphere/sht.hpp"

using namespace nlsphere;

static void BM_Synthesis(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const SphereGrid grid(n);
    const SphHarmCoeffs u = random_coeffs(n, n, 1.0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(synthesis(u, grid));
}
BENCHMARK(BM_Synthesis)->Arg(63)->Arg(127)->Arg(255)->Unit(benchmark::kMillisecond);

static void BM_Analysis(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const SphereGrid grid(n);
    const GridValues g = synthesis(random_coeffs(n, n, 1.0, 1), grid);
    for (auto _ : state) benchmark::DoNotOptimize(analysis(g, grid));
}
BENCHMARK(BM_Analysis)->Arg(63)->Arg(127)->Arg(255)->Unit(benchmark::kMillisecond);
