#include <benchmark/benchmark.h>

#include "autoeq/model.hpp"
#include "autoeq/solver.hpp"
#include "autoeq/sweep.hpp"

namespace {

// Calibrated reference value; hard-coded so the benchmarks don't pay for calibration.
constexpr double kAold = 3.0874;

void BM_Profit(benchmark::State& state) {
    const auto params = autoeq::reference_economy(kAold, 1.1);
    double labor = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(autoeq::profit(labor, params));
        labor = labor < 200.0 ? labor + 0.37 : 0.0;
    }
}
BENCHMARK(BM_Profit);

void BM_MaximizeProfit(benchmark::State& state) {
    const auto params = autoeq::reference_economy(kAold, 1.1);
    autoeq::SolverConfig cfg;
    cfg.coarse_grid_points = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(autoeq::maximize_profit(params, cfg));
}
BENCHMARK(BM_MaximizeProfit)->Arg(256)->Arg(2048)->Arg(16384);

void BM_BruteForce(benchmark::State& state) {
    const auto params = autoeq::reference_economy(kAold, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(autoeq::brute_force_equilibrium(params, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_BruteForce)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
    autoeq::SweepSpec spec;
    spec.params = autoeq::reference_economy(kAold);
    spec.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(autoeq::run_sweep(spec));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
