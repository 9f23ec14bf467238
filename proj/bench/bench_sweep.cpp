// Serial reference vs OpenMP sweep over the fig3-style grid, and the oracle
// joint-state construction at the acceptance dimension.

#include <benchmark/benchmark.h>

#include "purity/oracle.hpp"
#include "purity/scan.hpp"

namespace {

purity::GridSpec bench_grid() {
  purity::GridSpec g;
  g.s_values = {0.0};
  g.nbar_values = {20.0};
  g.theta = {0.0, 8.0, 0.02};
  return g;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto grid = bench_grid();
  for (auto _ : state) benchmark::DoNotOptimize(purity::sweep_serial(grid));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * grid.size()));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto grid = bench_grid();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(purity::sweep(grid, jobs));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * grid.size()));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_OracleJointState(benchmark::State& state) {
  purity::InterferometerConfig c;
  c.s = 0.3;
  c.nbar = static_cast<double>(state.range(0));
  c.theta = 2.1;
  for (auto _ : state) benchmark::DoNotOptimize(purity::final_joint_state(c));
}
BENCHMARK(BM_OracleJointState)->Arg(5)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
