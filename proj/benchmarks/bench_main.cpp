#include <benchmark/benchmark.h>

#include "nonstatic/nonstatic.hpp"

using namespace nonstatic;

namespace {

ModelParams fig1b() {
  ModelParams p;
  p.c1 = 5;
  p.c2 = 2;
  return p;
}

void BM_EvalF(benchmark::State& state) {
  const ModelParams p = fig1b();
  double t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_f(p, t));
    t += 0.001;
  }
}
BENCHMARK(BM_EvalF);

void BM_CoherentQGrid(benchmark::State& state) {
  const ModelParams p = fig1b();
  const QuadratureGrid grid(Axis::kQ, -12, 12, static_cast<std::size_t>(state.range(0)));
  const auto amp = amplitude(p, 1.0, 0.0, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(coherent_q(p, amp, grid, 0.7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CoherentQGrid)->Arg(1601)->Arg(16001);

void BM_FockQ(benchmark::State& state) {
  const ModelParams p = fig1b();
  const QuadratureGrid grid(Axis::kQ, -15, 15, 1601);
  for (auto _ : state) benchmark::DoNotOptimize(fock_q(p, static_cast<int>(state.range(0)), grid, 0.7));
}
BENCHMARK(BM_FockQ)->Arg(5)->Arg(50);

void BM_WignerClosed(benchmark::State& state) {
  const ModelParams p = fig1b();
  const auto amp = amplitude(p, 1.0, 0.0, 1.0);
  const auto grid = auto_phase_space_grid(p, amp, 1.0, 301, 301);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_closed(p, amp, grid));
}
BENCHMARK(BM_WignerClosed)->Unit(benchmark::kMillisecond);

void BM_WignerNumeric(benchmark::State& state) {
  const ModelParams p = fig1b();
  const auto amp = amplitude(p, 1.0, 0.0, 1.0);
  const auto grid = auto_phase_space_grid(p, amp, 1.0, 101, 101);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_numeric(p, amp, grid));
}
BENCHMARK(BM_WignerNumeric)->Unit(benchmark::kMillisecond);

void BM_MandelQ(benchmark::State& state) {
  const ModelParams p = fig1b();
  double t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mandel_q(p, amplitude(p, 1.0, 0.0, t), t));
    t += 0.001;
  }
}
BENCHMARK(BM_MandelQ);

void BM_ObservableSeries(benchmark::State& state) {
  const ModelParams p = fig1b();
  const auto times = time_grid(0, 6 * kPi, 10001);
  for (auto _ : state) benchmark::DoNotOptimize(observable_series(p, 1.0, 0.0, times));
}
BENCHMARK(BM_ObservableSeries)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
