// SPDX-License-Identifier: Apache-2.0
#include "multipack/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace multipack::numerics {

namespace {

double probe(const std::function<double(double, double)>& f, double x, double y) {
  double v = f(x, y);
  if (!std::isfinite(v)) throw NonFinite("minimize_2d: objective non-finite at probed point");
  return v;
}

}  // namespace

Min2dResult minimize_2d(const std::function<double(double, double)>& f, Interval bx,
                        Interval by, int grid, double refine_tol) {
  if (grid < 16) throw DomainError("minimize_2d: grid must be >= 16");

  const double hx = bx.width() / (grid - 1);
  const double hy = by.width() / (grid - 1);

  double best_x = bx.lo, best_y = by.lo;
  double best_v = probe(f, best_x, best_y);
  for (int i = 0; i < grid; ++i) {
    double x = (i == grid - 1) ? bx.hi : bx.lo + i * hx;
    for (int j = 0; j < grid; ++j) {
      double y = (j == grid - 1) ? by.hi : by.lo + j * hy;
      double v = probe(f, x, y);
      if (v < best_v) {
        best_v = v;
        best_x = x;
        best_y = y;
      }
    }
  }

  // Coordinate descent around the winning cell. Each sweep runs a golden
  // section per axis inside a local bracket, then shrinks the bracket.
  double wx = 2.0 * hx, wy = 2.0 * hy;
  for (int sweep = 0; sweep < 40; ++sweep) {
    double lox = std::max(bx.lo, best_x - wx), hix = std::min(bx.hi, best_x + wx);
    if (hix > lox) {
      best_x = golden_min([&](double x) { return probe(f, x, best_y); }, lox, hix,
                          std::max(refine_tol, 1e-15 * bx.width()));
    }
    double loy = std::max(by.lo, best_y - wy), hiy = std::min(by.hi, best_y + wy);
    if (hiy > loy) {
      best_y = golden_min([&](double y) { return probe(f, best_x, y); }, loy, hiy,
                          std::max(refine_tol, 1e-15 * by.width()));
    }
    double v = probe(f, best_x, best_y);
    if (v < best_v) best_v = v;
    wx = std::max(0.6 * wx, refine_tol);
    wy = std::max(0.6 * wy, refine_tol);
    if (wx <= refine_tol && wy <= refine_tol) break;
  }
  return {best_x, best_y, best_v};
}

double q_function(double x) {
  if (!std::isfinite(x)) throw DomainError("q_function: x must be finite");
  return 0.5 * std::erfc(x * M_SQRT1_2);
}

double chi_square_tail_exponent(double delta, TailSide side) {
  if (side == TailSide::upper) {
    if (!(delta > 0)) throw DomainError("chi_square_tail_exponent: upper needs delta > 0");
    return 0.5 * (-delta + std::log1p(delta));
  }
  if (!(delta > 0 && delta < 1))
    throw DomainError("chi_square_tail_exponent: lower needs delta in (0,1)");
  return 0.5 * (delta + std::log1p(-delta));
}

}  // namespace multipack::numerics
