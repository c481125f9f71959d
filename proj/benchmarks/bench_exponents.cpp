// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "multipack/awgn_exponents.hpp"
#include "multipack/numerics.hpp"
#include "multipack/poltyrev_exponents.hpp"

using namespace multipack;

static void ExponentSweep(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const double C = awgn::capacity(1.0);
  for (auto _ : state) {
    double acc = 0.0;
    for (int i = 0; i < 400; ++i)
      acc += awgn::exponent_lower_bound({1.0, C * i / 400.0}, L).value;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 400);
}
BENCHMARK(ExponentSweep)->Arg(2)->Arg(3)->Arg(5);

static void SolveT(benchmark::State& state) {
  for (auto _ : state) {
    double t = awgn::solve_t(0.01, 3);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(SolveT);

static void RceOracle2d(benchmark::State& state) {
  awgn::SnrRate sr{1.0, 0.25};
  auto neg = [&](double s, double g) { return -awgn::rce_objective(s, g, sr); };
  for (auto _ : state) {
    auto res = numerics::minimize_2d(neg, numerics::Interval(0.0, 0.499999),
                                     numerics::Interval(1.0, 3.0));
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(RceOracle2d)->Unit(benchmark::kMillisecond);

static void UnbddOracle(benchmark::State& state) {
  for (auto _ : state) {
    double v = poltyrev::numeric_exe_oracle({3.2, 3});
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(UnbddOracle)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
