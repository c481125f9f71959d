// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "multipack/errors.hpp"

namespace multipack::geometry {

using Vec = std::vector<double>;

/// Finite set of points in R^n, all with the same dimension n >= 1.
struct PointSet {
  std::vector<Vec> points;
  int dim = 0;

  PointSet() = default;
  explicit PointSet(std::vector<Vec> pts);

  int size() const { return static_cast<int>(points.size()); }
};

/// Smallest enclosing ball. `support` holds indices of input points on the
/// boundary that determine the ball (at most dim_aff + 1 of them).
struct EnclosingBall {
  Vec center;
  double radius_sq = 0.0;
  std::vector<int> support;
};

double dot(const Vec& a, const Vec& b);
double dist_sq(const Vec& a, const Vec& b);
double norm(const Vec& a);

/// Smallest ball containing all points (the Chebyshev ball of the set).
///
/// Welzl's move-to-front algorithm run on the points projected to an
/// orthonormal basis of their affine hull, so the recursion depth is bounded
/// by the point count rather than the ambient dimension.
/// Throws DegenerateInput on non-finite coordinates.
EnclosingBall chebyshev_ball(const PointSet& pts);

/// Squared (L-1)-list-decoding radius: the minimum Chebyshev radius over all
/// L-subsets of the code. Guarded: throws TooLarge when C(|code|, L) > 1e7.
double list_radius_sq(const PointSet& code, int L);

/// True iff every L-subset has Chebyshev radius exceeding sqrt(n*N), i.e.
/// list_radius_sq(code, L) > n*N strictly.
bool is_multiple_packing(const PointSet& code, double N, int L);

/// Order-|subset| Voronoi membership: y belongs to the region of `subset` iff
/// every code point outside the subset is strictly farther from y than the
/// farthest subset point. Boundary points (ties) belong to no region.
bool order_voronoi_member(const Vec& y, const PointSet& code, const std::vector<int>& subset);

/// Membership in the closed cone with the given apex, unit axis and angular
/// radius: <y - apex, axis> >= ||y - apex|| cos(half_angle). The apex itself
/// is a member.
bool cone_member(const Vec& y, const Vec& apex, const Vec& axis, double half_angle);

}  // namespace multipack::geometry
