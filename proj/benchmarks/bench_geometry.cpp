// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "multipack/geometry.hpp"
#include "multipack/numerics.hpp"

using namespace multipack;

static geometry::PointSet random_points(int m, int n, std::uint64_t seed) {
  numerics::RandomStream rs({seed, 0});
  geometry::PointSet pts;
  pts.dim = n;
  for (int i = 0; i < m; ++i) {
    geometry::Vec p(n);
    for (int t = 0; t < n; ++t) p[t] = rs.gaussian();
    pts.points.push_back(std::move(p));
  }
  return pts;
}

static void MiniballSmallLists(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  auto pts = random_points(L, L - 1, 7);
  for (auto _ : state) {
    auto ball = geometry::chebyshev_ball(pts);
    benchmark::DoNotOptimize(ball.radius_sq);
  }
}
BENCHMARK(MiniballSmallLists)->DenseRange(3, 9, 2);

static void MiniballHighAmbient(benchmark::State& state) {
  // few points embedded in a large ambient dimension: the hull projection
  // keeps the recursion in dimension <= m-1
  auto pts = random_points(6, static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    auto ball = geometry::chebyshev_ball(pts);
    benchmark::DoNotOptimize(ball.radius_sq);
  }
}
BENCHMARK(MiniballHighAmbient)->RangeMultiplier(4)->Range(16, 1024);

static void ListRadius(benchmark::State& state) {
  auto code = random_points(static_cast<int>(state.range(0)), 4, 13);
  for (auto _ : state) {
    double r2 = geometry::list_radius_sq(code, 3);
    benchmark::DoNotOptimize(r2);
  }
}
BENCHMARK(ListRadius)->DenseRange(8, 24, 8);

BENCHMARK_MAIN();
