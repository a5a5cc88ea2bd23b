#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "burgers/schemes.hpp"
#include "burgers/symmetry.hpp"

using namespace burgers;

namespace
{
State periodic_state(std::size_t n)
{
    const Grid1D grid = Grid1D::uniform(0.0, 2.0, n, Boundary::Periodic);
    return State::sample(grid, [](double x, double) { return 1.0 + 0.5 * std::sin(std::numbers::pi * x); },
                         0.0);
}

void bench_step(benchmark::State& bs, SchemeId id)
{
    const auto n = static_cast<std::size_t>(bs.range(0));
    const State u = periodic_state(n);
    const double h = u.grid.h();
    const SchemeParams p{0.01, h, 0.2 * h, 1.5};
    SchemeConfig scheme;
    scheme.id = id;
    for (auto _ : bs)
        benchmark::DoNotOptimize(step(scheme, u, p));
    bs.SetItemsProcessed(bs.iterations() * static_cast<int64_t>(n));
}

void BM_Ftcs(benchmark::State& s) { bench_step(s, SchemeId::FTCS); }
void BM_LaxWendroff(benchmark::State& s) { bench_step(s, SchemeId::LaxWendroff); }
void BM_CrankNicolson(benchmark::State& s) { bench_step(s, SchemeId::CrankNicolson); }
void BM_SemiInvariant(benchmark::State& s) { bench_step(s, SchemeId::SemiInvariant); }

void BM_InvarianceResidual(benchmark::State& bs)
{
    std::mt19937_64 rng(1);
    const EvolutionEquation eq = burgers_equation();
    const JetPoint jet = sample_constrained_jet(eq, rng);
    const GroupGenerator g = burgers_generator(4);
    for (auto _ : bs)
        benchmark::DoNotOptimize(pde_invariance_residual(g, eq, jet));
}
}  // namespace

BENCHMARK(BM_Ftcs)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_LaxWendroff)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_CrankNicolson)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_SemiInvariant)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_InvarianceResidual);

BENCHMARK_MAIN();
