// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "multipack/montecarlo.hpp"

using namespace multipack;

static void TwoPointTrials(benchmark::State& state) {
  mc::Codebook code;
  code.dim = 2;
  code.points = {{0, 0}, {2, 0}};
  const long long trials = state.range(0);
  for (auto _ : state) {
    auto est = mc::estimate_error_prob(code, 1.0, 1, trials, {1, 0});
    benchmark::DoNotOptimize(est.errors);
  }
  state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(TwoPointTrials)->Arg(10000)->Arg(100000);

static void ShellTrials(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto est = mc::estimate_shell_probability(400, 1.0, 1.0, 20000, {1, 0}, threads);
    benchmark::DoNotOptimize(est.errors);
  }
  state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(ShellTrials)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void PppSample(benchmark::State& state) {
  mc::PppConfig cfg;
  cfg.intensity = state.range(0);
  cfg.box = {{0.0, 0.0}, {1.0, 1.0}};
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto pts = mc::sample_ppp(cfg, {5, i++});
    benchmark::DoNotOptimize(pts.points.size());
  }
}
BENCHMARK(PppSample)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
