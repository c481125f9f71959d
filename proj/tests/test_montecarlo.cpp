// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "multipack/geometry.hpp"
#include "multipack/montecarlo.hpp"
#include "multipack/numerics.hpp"

using namespace multipack;
using geometry::PointSet;
using geometry::Vec;

TEST_CASE("spherical codes sit on the sphere and are seed-reproducible") {
  auto code = mc::sample_spherical_code(8, 500, 2.0, {11, 0});
  for (const auto& row : code.points)
    CHECK(std::fabs(geometry::norm(row) - std::sqrt(16.0)) <= 1e-9);
  auto again = mc::sample_spherical_code(8, 500, 2.0, {11, 0});
  CHECK(code.points == again.points);
  auto other = mc::sample_spherical_code(8, 500, 2.0, {12, 0});
  CHECK(code.points != other.points);
}

TEST_CASE("ml_list_decode ordering and ties") {
  mc::Codebook code;
  code.dim = 1;
  code.points = {{0.0}, {2.0}, {10.0}};
  CHECK(mc::ml_list_decode(code, {0.9}, 2) == std::vector<int>{0, 1});
  CHECK(mc::ml_list_decode(code, {2.0}, 1) == std::vector<int>{1});
  CHECK(mc::ml_list_decode(code, {1.0}, 1) == std::vector<int>{0});  // tie -> lowest index
  CHECK_THROWS_AS(mc::ml_list_decode(code, {0.0}, 3), DomainError);
}

TEST_CASE("noiseless limit gives zero errors") {
  mc::Codebook code;
  code.dim = 2;
  code.points = {{0, 0}, {5, 0}, {0, 5}};
  auto est = mc::estimate_error_prob(code, 1e-6, 1, 3000, {3, 0});
  CHECK(est.errors == 0);
  CHECK(est.p_hat == 0.0);
  CHECK(std::isnan(est.log_p_hat));
}

TEST_CASE("two-point code matches the Q-function within noise") {
  mc::Codebook code;
  code.dim = 3;
  code.points = {{0, 0, 0}, {2, 0, 0}};
  auto est = mc::estimate_error_prob(code, 1.0, 1, 100000, {17, 0}, 4);
  double target = numerics::q_function(1.0);
  CHECK(std::fabs(est.p_hat - target) <= 3.0 * est.std_error);
}

TEST_CASE("thread count never changes the outcome") {
  mc::Codebook code;
  code.dim = 2;
  code.points = {{0, 0}, {2.5, 0}, {0, 2.5}, {2, 2}};
  auto a = mc::estimate_error_prob(code, 0.9, 2, 30000, {23, 0}, 1);
  auto b = mc::estimate_error_prob(code, 0.9, 2, 30000, {23, 0}, 3);
  auto c = mc::estimate_error_prob(code, 0.9, 2, 30000, {23, 0}, 8);
  CHECK(a.errors == b.errors);
  CHECK(b.errors == c.errors);
}

TEST_CASE("list identity on a two-point list reproduces the exact ratio") {
  // a/(2 sigma) = 3 => p = Q(3), ratio = -ln Q(3) / (a^2/(8 sigma^2))
  const double a = 6.0, sigma = 1.0;
  PointSet two;
  two.dim = 4;
  two.points = {Vec{0, 0, 0, 0}, Vec{a, 0, 0, 0}};
  auto res = mc::estimate_list_identity(two, sigma, 400000, {29, 0}, 4);
  double exponent = (a / 2) * (a / 2) / (2 * sigma * sigma);
  double exact_ratio = -std::log(numerics::q_function(3.0)) / exponent;
  // noise on the ratio: se(p)/ (p * exponent)
  double se_ratio = res.estimate.std_error / (res.estimate.p_hat * exponent);
  CHECK(std::fabs(res.ratio - exact_ratio) <= 4.0 * se_ratio);
  CHECK(res.vertex_trials[0] + res.vertex_trials[1] == 400000);
}

TEST_CASE("list identity raises when error events are too rare") {
  PointSet two;
  two.dim = 2;
  two.points = {Vec{0, 0}, Vec{20, 0}};
  CHECK_THROWS_AS(mc::estimate_list_identity(two, 1.0, 2000, {31, 0}), InsufficientErrors);
}

TEST_CASE("expurgation keeps the best half, stably") {
  mc::Codebook code;
  code.dim = 1;
  code.points = {{0}, {1}, {2}, {3}};
  auto kept = mc::expurgate_half(code, {0.9, 0.1, 0.2, 0.8});
  CHECK(kept.points == std::vector<Vec>{{1}, {2}});
  auto ties = mc::expurgate_half(code, {0.4, 0.4, 0.4, 0.4});
  CHECK(ties.points == std::vector<Vec>{{0}, {1}});
  code.points = {{0}, {1}, {2}};
  auto odd = mc::expurgate_half(code, {0.3, 0.1, 0.2});
  CHECK(odd.points.size() == 2);  // ceil(3/2)
}

TEST_CASE("ppp count is Poisson-mean and spatially independent") {
  mc::PppConfig cfg;
  cfg.intensity = 10.0;
  cfg.box = {{0.0, 0.0}, {1.0, 1.0}};
  const int draws = 10000;
  double mean = 0.0;
  for (int i = 0; i < draws; ++i)
    mean += double(mc::sample_ppp(cfg, {41, std::uint64_t(i)}).points.size());
  mean /= draws;
  CHECK(std::fabs(mean - 10.0) <= 4.0 * std::sqrt(10.0 / draws));

  // all points inside the box
  auto ps = mc::sample_ppp(cfg, {41, 1});
  for (const auto& p : ps.points) CHECK(cfg.box.contains(p));
}

TEST_CASE("matern thinning removes both members of close pairs") {
  mc::PppConfig cfg;
  cfg.intensity = 3.0;
  cfg.box = {{0.0, 0.0}, {4.0, 4.0}};
  cfg.exclusion_radius = 0.5;
  for (int i = 0; i < 50; ++i) {
    auto thinned = mc::sample_matern(cfg, {43, std::uint64_t(i)});
    for (std::size_t a = 0; a < thinned.points.size(); ++a)
      for (std::size_t b = a + 1; b < thinned.points.size(); ++b)
        CHECK(geometry::dist_sq(thinned.points[a], thinned.points[b]) > 0.25);
    // thinned set is a subset of the parent PPP
    auto parent = mc::sample_ppp(cfg, {43, std::uint64_t(i)});
    for (const auto& p : thinned.points) {
      bool found = false;
      for (const auto& q : parent.points) found = found || p == q;
      CHECK(found);
    }
  }
}

TEST_CASE("tiling: lattice example and window guard") {
  mc::Codebook base;
  base.dim = 1;
  base.points = {{0.0}};
  auto lat = mc::tile_constellation(base, 1.0, 0.0, {{-2.5}, {2.5}});
  CHECK(lat.points == std::vector<Vec>{{-2}, {-1}, {0}, {1}, {2}});

  CHECK_THROWS_AS(mc::tile_constellation(base, 1.0, 0.0, {{-1e8}, {1e8}}), WindowTooLarge);
  mc::Codebook off;
  off.dim = 1;
  off.points = {{0.9}};
  CHECK_THROWS_AS(mc::tile_constellation(off, 1.0, 0.0, {{-1.0}, {1.0}}), DomainError);
}

TEST_CASE("shell probability vanishes as the window closes") {
  auto est = mc::estimate_shell_probability(100, 1.0, 1e-9, 20000, {49, 0});
  CHECK(est.errors == 0);
}

TEST_CASE("shell probability: doubling a small delta doubles the mass") {
  auto a = mc::estimate_shell_probability(200, 1.0, 0.5, 300000, {47, 0}, 4);
  auto b = mc::estimate_shell_probability(200, 1.0, 1.0, 300000, {48, 0}, 4);
  CHECK(std::fabs(b.p_hat - 2.0 * a.p_hat) <= 3.0 * (b.std_error + 2.0 * a.std_error));
  // CLT window value at n = 200
  double target = 1.0 / (2.0 * std::sqrt(200.0 * M_PI));
  CHECK(std::fabs(b.p_hat - target) <= 4.0 * b.std_error);
}
