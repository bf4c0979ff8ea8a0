#include <benchmark/benchmark.h>

#include "nlsphere/models.hpp"
#include "nlsphere/sht.hpp"
#include "nlsphere/timestep.hpp"

using namespace nlsphere;

static void BM_AllenCahnStep(benchmark::State& state)
{
    AllenCahnConfig cfg;
    cfg.degree = static_cast<int>(state.range(0));
    const SphereGrid grid(cfg.degree);
    const DiagonalOperator op = allen_cahn_operator(cfg);
    const Etdrk4Tables tables = etdrk4_tables(op, cfg.h);
    const FieldsNonlinearity nl = allen_cahn_pseudospectral(grid);
    Fields u{cos10xy(cfg.degree)};
    long step = 0;
    for (auto _ : state) u = etdrk4_step(u, std::span<const Etdrk4Tables>(&tables, 1), nl, ++step);
}
BENCHMARK(BM_AllenCahnStep)->Arg(63)->Arg(127)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
