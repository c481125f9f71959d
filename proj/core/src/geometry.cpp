// SPDX-License-Identifier: Apache-2.0
#include "multipack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <list>
#include <numeric>

namespace multipack::geometry {

PointSet::PointSet(std::vector<Vec> pts) : points(std::move(pts)) {
  if (points.empty()) throw DomainError("PointSet: needs at least one point");
  dim = static_cast<int>(points[0].size());
  if (dim < 1) throw DomainError("PointSet: dimension must be >= 1");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw DomainError("PointSet: inconsistent dimensions");
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dist_sq(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

namespace {

struct Ball {
  Vec c;             // center in projected coordinates
  double r2 = -1.0;  // negative marks "empty" (contains nothing)
  std::vector<int> support;
};

bool contains(const Ball& b, const Vec& q) {
  if (b.r2 < 0.0) return false;
  return dist_sq(b.c, q) <= b.r2 * (1.0 + 1e-10) + 1e-30;
}

// Circumball of the support set inside its own affine hull: the unique point
// equidistant from all support points that lies in aff(support).
// Returns false when the support is (numerically) affinely dependent.
bool ball_of_support(const std::vector<Vec>& q, const std::vector<int>& sup, Ball& out) {
  out.support = sup;
  if (sup.empty()) {
    out.c.assign(q.empty() ? 0 : q[0].size(), 0.0);
    out.r2 = -1.0;
    return true;
  }
  const Vec& q0 = q[sup[0]];
  const int k = static_cast<int>(sup.size()) - 1;
  if (k == 0) {
    out.c = q0;
    out.r2 = 0.0;
    return true;
  }
  // Solve A lam = rhs, A_ij = 2 (q_i - q0).(q_j - q0), rhs_i = ||q_i - q0||^2.
  std::vector<Vec> d(k);
  for (int i = 0; i < k; ++i) {
    d[i].resize(q0.size());
    const Vec& qi = q[sup[i + 1]];
    for (std::size_t t = 0; t < q0.size(); ++t) d[i][t] = qi[t] - q0[t];
  }
  std::vector<std::vector<double>> A(k, std::vector<double>(k + 1));
  double scale = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      A[i][j] = 2.0 * dot(d[i], d[j]);
      scale = std::max(scale, std::fabs(A[i][j]));
    }
    A[i][k] = dot(d[i], d[i]);
  }
  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
    if (std::fabs(A[piv][col]) <= 1e-13 * std::max(scale, 1e-300)) return false;
    std::swap(A[piv], A[col]);
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      double m = A[r][col] / A[col][col];
      for (int cc = col; cc <= k; ++cc) A[r][cc] -= m * A[col][cc];
    }
  }
  out.c = q0;
  for (int i = 0; i < k; ++i) {
    double lam = A[i][k] / A[i][i];
    for (std::size_t t = 0; t < q0.size(); ++t) out.c[t] += lam * d[i][t];
  }
  out.r2 = dist_sq(out.c, q0);
  return true;
}

Ball welzl(std::list<int>& pts, std::vector<int>& sup, int dim_aff, const std::vector<Vec>& q) {
  Ball ball;
  bool ok = ball_of_support(q, sup, ball);
  if (!ok) {
    ball.r2 = -1.0;
    return ball;
  }
  if (static_cast<int>(sup.size()) == dim_aff + 1) return ball;

  for (auto it = pts.begin(); it != pts.end(); ++it) {
    if (contains(ball, q[*it])) continue;
    int p = *it;
    std::list<int> prefix(pts.begin(), it);
    sup.push_back(p);
    Ball cand = welzl(prefix, sup, dim_aff, q);
    sup.pop_back();
    if (cand.r2 >= 0.0) {
      ball = cand;
      // move-to-front: points that forced a rebuild are likely extreme
      pts.erase(it);
      pts.push_front(p);
      it = pts.begin();
    }
  }
  return ball;
}

// Exact fallback for degenerate ties: smallest circumball over all affinely
// independent subsets that contains every point. Cost grows quickly with the
// point count, so this only runs when the Welzl result fails its audit.
Ball smallest_ball_by_subsets(const std::vector<Vec>& q, int dim_aff) {
  const int m = static_cast<int>(q.size());
  Ball best;
  best.r2 = std::numeric_limits<double>::infinity();
  std::vector<int> sub;
  double checked = 0.0;
  std::function<void(int)> rec = [&](int next) {
    if (!sub.empty()) {
      checked += 1.0;
      if (checked > 2e6) throw TooLarge("chebyshev_ball: degenerate fallback too large");
      Ball cand;
      if (ball_of_support(q, sub, cand) && cand.r2 < best.r2) {
        bool all_in = true;
        for (const auto& p : q)
          if (dist_sq(cand.c, p) > cand.r2 * (1.0 + 1e-10) + 1e-30) {
            all_in = false;
            break;
          }
        if (all_in) best = cand;
      }
    }
    if (static_cast<int>(sub.size()) == dim_aff + 1) return;
    for (int i = next; i < m; ++i) {
      sub.push_back(i);
      rec(i + 1);
      sub.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace

EnclosingBall chebyshev_ball(const PointSet& pts) {
  const int m = pts.size();
  const int n = pts.dim;
  for (const auto& p : pts.points)
    for (double v : p)
      if (!std::isfinite(v)) throw DegenerateInput("chebyshev_ball: non-finite coordinate");

  // Drop exact duplicates; they contribute nothing to the ball.
  std::vector<int> orig_index;
  std::vector<Vec> uniq;
  for (int i = 0; i < m; ++i) {
    bool dup = false;
    for (const auto& u : uniq)
      if (u == pts.points[i]) {
        dup = true;
        break;
      }
    if (!dup) {
      uniq.push_back(pts.points[i]);
      orig_index.push_back(i);
    }
  }

  // Orthonormal basis of the affine hull (Gram-Schmidt on p_i - p_0).
  const Vec& p0 = uniq[0];
  std::vector<Vec> basis;
  double diff_scale = 0.0;
  for (std::size_t i = 1; i < uniq.size(); ++i) {
    Vec w(n);
    for (int t = 0; t < n; ++t) w[t] = uniq[i][t] - p0[t];
    diff_scale = std::max(diff_scale, norm(w));
  }
  for (std::size_t i = 1; i < uniq.size(); ++i) {
    Vec w(n);
    for (int t = 0; t < n; ++t) w[t] = uniq[i][t] - p0[t];
    for (const auto& b : basis) {
      double proj = dot(w, b);
      for (int t = 0; t < n; ++t) w[t] -= proj * b[t];
    }
    double nw = norm(w);
    if (nw > 1e-12 * std::max(diff_scale, 1e-300)) {
      for (int t = 0; t < n; ++t) w[t] /= nw;
      basis.push_back(std::move(w));
    }
  }
  const int d = static_cast<int>(basis.size());

  // Projected coordinates.
  std::vector<Vec> q(uniq.size(), Vec(std::max(d, 1), 0.0));
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    Vec w(n);
    for (int t = 0; t < n; ++t) w[t] = uniq[i][t] - p0[t];
    for (int k = 0; k < d; ++k) q[i][k] = dot(w, basis[k]);
  }

  std::list<int> order(q.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> sup;
  Ball ball = welzl(order, sup, d, q);
  if (uniq.size() == 1) {
    ball.c = q[0];
    ball.r2 = 0.0;
    ball.support = {0};
  } else {
    // Audit: every point inside within tolerance, else exact fallback.
    bool ok = ball.r2 >= 0.0;
    if (ok) {
      double slack = 1e-9 * std::max(1.0, std::sqrt(ball.r2)) + 1e-18;
      for (const auto& p : q) {
        double dist = std::sqrt(dist_sq(ball.c, p));
        if (dist > std::sqrt(ball.r2) + slack) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) ball = smallest_ball_by_subsets(q, d);
  }

  EnclosingBall out;
  out.radius_sq = ball.r2;
  out.center = p0;
  for (int k = 0; k < d; ++k)
    for (int t = 0; t < n; ++t) out.center[t] += ball.c[k] * basis[k][t];
  out.support.reserve(ball.support.size());
  for (int s : ball.support) out.support.push_back(orig_index[s]);
  std::sort(out.support.begin(), out.support.end());
  return out;
}

namespace {

void enumerate_lists(const PointSet& code, int L, std::vector<int>& pick, int next,
                     const std::vector<std::vector<double>>& pair_d2, double prefix_maxpair,
                     double& best) {
  if (static_cast<int>(pick.size()) == L) {
    PointSet sub;
    sub.dim = code.dim;
    for (int idx : pick) sub.points.push_back(code.points[idx]);
    double r2 = chebyshev_ball(sub).radius_sq;
    best = std::min(best, r2);
    return;
  }
  const int m = code.size();
  const int remaining = L - static_cast<int>(pick.size());
  for (int i = next; i + remaining <= m; ++i) {
    double mp = prefix_maxpair;
    for (int idx : pick) mp = std::max(mp, pair_d2[idx][i]);
    if (mp / 4.0 >= best) continue;  // rad^2 >= (max pairwise)^2 / 4
    pick.push_back(i);
    enumerate_lists(code, L, pick, i + 1, pair_d2, mp, best);
    pick.pop_back();
  }
}

}  // namespace

double list_radius_sq(const PointSet& code, int L) {
  const int m = code.size();
  if (L < 2 || m < L) throw DomainError("list_radius_sq: need |code| >= L >= 2");

  double combos = 1.0;
  for (int i = 0; i < L; ++i) combos *= static_cast<double>(m - i) / (i + 1);
  if (combos > 1e7) throw TooLarge("list_radius_sq: C(|code|, L) exceeds 1e7");

  if (L == 2) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        best = std::min(best, dist_sq(code.points[i], code.points[j]));
    return best / 4.0;
  }

  std::vector<std::vector<double>> pair_d2(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      pair_d2[i][j] = pair_d2[j][i] = dist_sq(code.points[i], code.points[j]);

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick;
  enumerate_lists(code, L, pick, 0, pair_d2, 0.0, best);
  return best;
}

bool is_multiple_packing(const PointSet& code, double N, int L) {
  if (!(N > 0)) throw DomainError("is_multiple_packing: N must be positive");
  return list_radius_sq(code, L) > code.dim * N;
}

bool order_voronoi_member(const Vec& y, const PointSet& code, const std::vector<int>& subset) {
  if (subset.empty() || static_cast<int>(subset.size()) >= code.size())
    throw DomainError("order_voronoi_member: subset must be a nonempty proper subset");
  std::vector<char> in_subset(code.size(), 0);
  for (int idx : subset) {
    if (idx < 0 || idx >= code.size()) throw DomainError("order_voronoi_member: index out of range");
    in_subset[idx] = 1;
  }
  double rmax = 0.0;
  for (int idx : subset) rmax = std::max(rmax, dist_sq(y, code.points[idx]));
  for (int i = 0; i < code.size(); ++i) {
    if (in_subset[i]) continue;
    if (!(dist_sq(y, code.points[i]) > rmax)) return false;  // ties excluded
  }
  return true;
}

bool cone_member(const Vec& y, const Vec& apex, const Vec& axis, double half_angle) {
  if (!(half_angle > 0.0 && half_angle < M_PI / 2))
    throw DomainError("cone_member: half_angle must lie in (0, pi/2)");
  double an = norm(axis);
  if (std::fabs(an - 1.0) > 1e-12) throw DomainError("cone_member: axis must be a unit vector");
  Vec v(y.size());
  for (std::size_t t = 0; t < y.size(); ++t) v[t] = y[t] - apex[t];
  return dot(v, axis) >= norm(v) * std::cos(half_angle);
}

}  // namespace multipack::geometry
