// Serial reference vs OpenMP sweep on the figure presets.
//   ./bench_sweep --benchmark_filter=fig4

#include <benchmark/benchmark.h>

#include "eic/sweep.hpp"

namespace {

void run(benchmark::State& state, const char* name, bool parallel) {
  const eic::SweepSpec spec = eic::preset(name);
  for (auto _ : state) {
    auto table = parallel ? eic::run_sweep(spec) : eic::run_sweep_serial(spec);
    benchmark::DoNotOptimize(table.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.grid.size()));
}

void BM_Fig2aSerial(benchmark::State& s) { run(s, "fig2a", false); }
void BM_Fig2aParallel(benchmark::State& s) { run(s, "fig2a", true); }
void BM_Fig4Serial(benchmark::State& s) { run(s, "fig4", false); }
void BM_Fig4Parallel(benchmark::State& s) { run(s, "fig4", true); }

void BM_SinglePoint(benchmark::State& state) {
  eic::ModelParams p;
  p.probe_detuning = -25e3;
  for (auto _ : state) benchmark::DoNotOptimize(eic::evaluate_point(p).index.n);
}

}  // namespace

BENCHMARK(BM_Fig2aSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Fig2aParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Fig4Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Fig4Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SinglePoint)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
