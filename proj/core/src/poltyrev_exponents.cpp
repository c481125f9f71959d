// SPDX-License-Identifier: Apache-2.0
#include "multipack/poltyrev_exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace multipack::poltyrev {

namespace {

void require_alpha(const AlphaL& a) {
  if (!(a.alpha >= 1.0)) throw DomainError("poltyrev: alpha must be >= 1");
  if (a.L < 2) throw DomainError("poltyrev: L must be >= 2");
}

double disc(double alpha, int L) {
  const double a2 = alpha * alpha;
  return std::sqrt(a2 * a2 + 8.0 * a2 * (2.0 * L - 3.0) + 16.0);
}

}  // namespace

double rate_from_alpha(double alpha, double sigma) {
  if (!(alpha >= 1.0) || !(sigma > 0)) throw DomainError("rate_from_alpha: need alpha >= 1, sigma > 0");
  return 0.5 * std::log(1.0 / (2.0 * M_PI * M_E * sigma * sigma * alpha * alpha));
}

double e_r_unbdd(AlphaL a) {
  require_alpha(a);
  if (a.alpha <= std::sqrt(double(a.L)))
    return 0.5 * a.alpha * a.alpha - std::log(a.alpha) - 0.5;
  return e_sl_unbdd(a);
}

double e_sl_unbdd(AlphaL a) {
  require_alpha(a);
  const double Ld = a.L;
  return 0.5 * (Ld - 1.0) - 0.5 * Ld * std::log(Ld) + (Ld - 1.0) * std::log(a.alpha);
}

double e_ex_unbdd(AlphaL a) {
  require_alpha(a);
  const double Ld = a.L;
  const double a2 = a.alpha * a.alpha;
  const double D = disc(a.alpha, a.L);
  return a2 / 16.0 + D / 16.0 - 0.5 * (Ld - 1.0) * std::log(D - a2 + 4.0) +
         0.5 * (Ld - 2.0) * std::log(D + a2 + 4.0) + 1.5 * std::log(2.0) - 0.25;
}

double expurg_s0(AlphaL a) {
  require_alpha(a);
  const double a2 = a.alpha * a.alpha;
  return std::sqrt((a2 + disc(a.alpha, a.L) + 4.0) / 8.0);
}

ExponentPoint exponent_lower_bound_unbdd(AlphaL a) {
  require_alpha(a);
  ExponentPoint out;
  out.alpha = a.alpha;
  const double sqrtL = std::sqrt(double(a.L));
  const double sqrt2L = std::sqrt(2.0 * a.L);
  if (a.alpha <= sqrtL) {
    out.regime = Regime::random_coding;
    out.value = 0.5 * a.alpha * a.alpha - std::log(a.alpha) - 0.5;
  } else if (a.alpha <= sqrt2L) {
    out.regime = Regime::straight_line;
    out.value = e_sl_unbdd(a);
  } else {
    out.regime = Regime::expurgated;
    out.value = e_ex_unbdd(a);
  }
  return out;
}

double c_of_s(double s, double alpha) {
  if (!(s > 0) || !(alpha >= 1.0)) throw DomainError("c_of_s: need s > 0, alpha >= 1");
  if (s <= alpha / 2.0) return 0.0;
  if (s <= alpha / std::sqrt(2.0)) {
    const double t = s - alpha * alpha / (2.0 * s);
    return std::sqrt(s * s - t * t);
  }
  return s;
}

double gaussian_norm_density_exponent(double s) {
  if (!(s > 0)) throw DomainError("gaussian_norm_density_exponent: s must be positive");
  return 0.5 * s * s - std::log(s) - 0.5;
}

double numeric_exe_oracle(AlphaL a) {
  require_alpha(a);
  const double alpha = a.alpha;
  const double Ld = a.L;
  const double lo2 = alpha / 2.0, hi2 = alpha / std::sqrt(2.0);

  auto base = [](double s) { return 0.5 * s * s - std::log(s) - 0.5; };
  auto f2 = [&](double s) {
    double c = s * s - std::pow(s - alpha * alpha / (2.0 * s), 2.0);
    return base(s) + (Ld - 1.0) * (std::log(alpha) - 0.5 * std::log(c));
  };
  auto f3 = [&](double s) {
    return base(s) + (Ld - 1.0) * std::max(0.0, std::log(alpha) - std::log(s));
  };

  // the middle-range minimum is an interior stationary point (quadratic),
  // the outer range has kinks at s = alpha and s = sqrt(L), so it gets the
  // denser grid
  double best = std::numeric_limits<double>::infinity();
  const int grid2 = 50000;
  for (int i = 1; i <= grid2; ++i) {
    double s = lo2 + (hi2 - lo2) * i / grid2;
    best = std::min(best, f2(s));
  }
  const double hi3 = std::max(alpha, std::sqrt(Ld)) + 3.0;
  const int grid3 = 400000;
  for (int i = 1; i <= grid3; ++i) {
    double s = hi2 + (hi3 - hi2) * i / grid3;
    best = std::min(best, f3(s));
  }
  return best;
}

double r_star(double alpha, double sigma, int n) {
  if (!(alpha >= 1.0) || !(sigma > 0) || n < 1)
    throw DomainError("r_star: need alpha >= 1, sigma > 0, n >= 1");
  return alpha * sigma * std::sqrt(double(n));
}

double poltyrev_ud(double alpha) {
  if (!(alpha >= 1.0)) throw DomainError("poltyrev_ud: alpha must be >= 1");
  if (alpha <= std::sqrt(2.0)) return 0.5 * alpha * alpha - std::log(alpha) - 0.5;
  if (alpha <= 2.0) return 0.5 - std::log(2.0) + std::log(alpha);
  return alpha * alpha / 8.0;
}

}  // namespace multipack::poltyrev
