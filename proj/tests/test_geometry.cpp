// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>

#include <doctest.h>

#include "multipack/geometry.hpp"
#include "multipack/numerics.hpp"
#include "multipack/verify.hpp"

using namespace multipack;
using geometry::PointSet;
using geometry::Vec;

namespace {

// Two-stage grid search over candidate centers; crude but fully independent.
double grid_search_radius_sq(const PointSet& pts, double lo, double hi, int grid) {
  REQUIRE(pts.dim == 2);
  double bx = lo, by = lo, best = std::numeric_limits<double>::infinity();
  auto scan = [&](double x0, double x1, double y0, double y1) {
    for (int i = 0; i <= grid; ++i)
      for (int j = 0; j <= grid; ++j) {
        Vec c = {x0 + (x1 - x0) * i / grid, y0 + (y1 - y0) * j / grid};
        double worst = 0.0;
        for (const auto& p : pts.points) worst = std::max(worst, geometry::dist_sq(c, p));
        if (worst < best) {
          best = worst;
          bx = c[0];
          by = c[1];
        }
      }
  };
  scan(lo, hi, lo, hi);
  double h = 2.0 * (hi - lo) / grid;
  scan(bx - h, bx + h, by - h, by + h);
  scan(bx - h / 50, bx + h / 50, by - h / 50, by + h / 50);
  return best;
}

}  // namespace

TEST_CASE("chebyshev_ball on canonical small sets") {
  PointSet pair(std::vector<Vec>{{0, 0}, {2, 0}});
  auto b = geometry::chebyshev_ball(pair);
  CHECK(b.center[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.center[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(b.radius_sq == doctest::Approx(1.0).epsilon(1e-12));

  // obtuse triangle: ball spans the longest edge, radius is half that edge
  PointSet obtuse(std::vector<Vec>{{0, 0}, {3, 0}, {1, 0.1}});
  auto ob = geometry::chebyshev_ball(obtuse);
  CHECK(ob.radius_sq == 2.25);
  CHECK(ob.support == std::vector<int>{0, 1});

  // equilateral with side 1: circumradius^2 = 1/3
  PointSet eq(std::vector<Vec>{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
  auto eb = geometry::chebyshev_ball(eq);
  CHECK(std::fabs(eb.radius_sq - 1.0 / 3.0) <= 1e-12);
  CHECK(std::fabs(grid_search_radius_sq(eq, -0.2, 1.2, 400) - 1.0 / 3.0) <= 1e-4);
  CHECK(eb.support.size() == 3);
}

TEST_CASE("chebyshev_ball handles duplicates, singletons and bad input") {
  PointSet dup(std::vector<Vec>{{1, 1}, {1, 1}, {1, 1}});
  auto b = geometry::chebyshev_ball(dup);
  CHECK(b.radius_sq == 0.0);

  PointSet single(std::vector<Vec>{{3, -4, 5}});
  CHECK(geometry::chebyshev_ball(single).radius_sq == 0.0);

  PointSet bad(std::vector<Vec>{{0, 0}, {1, 0}});
  bad.points[1][0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(geometry::chebyshev_ball(bad), DegenerateInput);
}

TEST_CASE("chebyshev_ball respects its reported invariants on random input") {
  numerics::RandomStream rs({5150, 0});
  for (int inst = 0; inst < 200; ++inst) {
    int m = 1 + int(rs.uniform() * 7);
    int n = 1 + int(rs.uniform() * 6);
    PointSet pts;
    pts.dim = n;
    for (int i = 0; i < m; ++i) {
      Vec p(n);
      for (int t = 0; t < n; ++t) p[t] = rs.gaussian() * 3;
      pts.points.push_back(std::move(p));
    }
    auto ball = geometry::chebyshev_ball(pts);
    double r = std::sqrt(ball.radius_sq);
    CHECK(int(ball.support.size()) <= std::min(m, n + 1));
    for (const auto& p : pts.points)
      CHECK(std::sqrt(geometry::dist_sq(ball.center, p)) <= r + 1e-9);
    for (int s : ball.support) {
      double d = std::sqrt(geometry::dist_sq(ball.center, pts.points[s]));
      CHECK(std::fabs(d - r) <= 1e-9);
    }
  }
}

TEST_CASE("list_radius_sq on pinned examples") {
  PointSet collinear(std::vector<Vec>{{0.0}, {1.0}, {2.0}});
  CHECK(geometry::list_radius_sq(collinear, 2) == doctest::Approx(0.25).epsilon(1e-12));

  PointSet square(std::vector<Vec>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(geometry::list_radius_sq(square, 4) == doctest::Approx(0.5).epsilon(1e-12));
  // any right triangle from the square has circumradius = half diagonal
  CHECK(geometry::list_radius_sq(square, 3) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(geometry::list_radius_sq(square, 5), DomainError);
}

TEST_CASE("list_radius_sq enumeration guard") {
  PointSet big;
  big.dim = 1;
  for (int i = 0; i < 600; ++i) big.points.push_back({double(i)});
  CHECK_THROWS_AS(geometry::list_radius_sq(big, 4), TooLarge);  // C(600,4) ~ 5.3e9
}

TEST_CASE("is_multiple_packing uses the strict inequality") {
  PointSet two(std::vector<Vec>{{0.0}, {2.0}});
  CHECK(geometry::is_multiple_packing(two, 0.5, 2));
  CHECK_FALSE(geometry::is_multiple_packing(two, 1.0, 2));  // boundary excluded

  PointSet square(std::vector<Vec>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(geometry::is_multiple_packing(square, 0.24, 3));  // 0.5 > 2*0.24
  CHECK_FALSE(geometry::is_multiple_packing(square, 0.26, 3));
}

TEST_CASE("order_voronoi_member strictness and examples") {
  PointSet code(std::vector<Vec>{{0.0}, {2.0}});
  CHECK(geometry::order_voronoi_member({-1.0}, code, {0}));
  CHECK_FALSE(geometry::order_voronoi_member({1.0}, code, {0}));  // bisector tie
  CHECK_FALSE(geometry::order_voronoi_member({1.0}, code, {1}));
  CHECK_THROWS_AS(geometry::order_voronoi_member({0.0}, code, {}), DomainError);
  CHECK_THROWS_AS(geometry::order_voronoi_member({0.0}, code, {0, 1}), DomainError);

  // acute triangle: far out along the direction away from x1, the pair {x2,x3}
  // is the nearest 2-set
  PointSet tri(std::vector<Vec>{{0, 1}, {-0.9, -0.6}, {0.9, -0.6}});
  Vec far_down = {0.0, -5.0};
  CHECK(geometry::order_voronoi_member(far_down, tri, {1, 2}));
  CHECK_FALSE(geometry::order_voronoi_member(far_down, tri, {0, 1}));
}

TEST_CASE("cone_member convention and edge cases") {
  Vec apex = {0, 0, 0};
  Vec axis = {1, 0, 0};
  CHECK(geometry::cone_member(apex, apex, axis, 0.5));          // apex belongs
  CHECK(geometry::cone_member({1, 0, 0}, apex, axis, 0.5));     // on the axis
  CHECK_FALSE(geometry::cone_member({0, 1, 0}, apex, axis, M_PI / 4));
  CHECK(geometry::cone_member({1, 0.9, 0}, apex, axis, M_PI / 4));
  CHECK_FALSE(geometry::cone_member({1, 1.1, 0}, apex, axis, M_PI / 4));
  CHECK_THROWS_AS(geometry::cone_member({1, 0, 0}, apex, {2, 0, 0}, 0.5), DomainError);
  CHECK_THROWS_AS(geometry::cone_member({1, 0, 0}, apex, axis, 2.0), DomainError);
}

TEST_CASE("miniball agrees with the subset-circumsphere oracle") {
  numerics::RandomStream rs({424242, 0});
  for (int inst = 0; inst < 200; ++inst) {
    int m = 1 + int(rs.uniform() * 6);
    int n = 1 + int(rs.uniform() * 8);
    PointSet pts;
    pts.dim = n;
    for (int i = 0; i < m; ++i) {
      Vec p(n);
      for (int t = 0; t < n; ++t) p[t] = rs.gaussian();
      pts.points.push_back(std::move(p));
    }
    double fast = geometry::chebyshev_ball(pts).radius_sq;
    double brute = verify::miniball_bruteforce_radius_sq(pts);
    CHECK(std::fabs(fast - brute) <= 1e-9 * std::max(1.0, brute));
  }
}
