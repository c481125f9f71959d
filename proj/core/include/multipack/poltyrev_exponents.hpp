// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "multipack/errors.hpp"
#include "multipack/regime.hpp"

namespace multipack::poltyrev {

/// Distance-to-capacity parameter alpha >= 1 and list-plus-one size L.
/// At noise level sigma the rate is R = (1/2) ln(1/(2 pi e sigma^2 alpha^2)).
struct AlphaL {
  double alpha;
  int L;
};

struct ExponentPoint {
  double alpha;
  double value;
  Regime regime;
};

/// Rate (NLD, nats) corresponding to (alpha, sigma).
double rate_from_alpha(double alpha, double sigma);

/// Random-coding exponent: alpha^2/2 - ln(alpha) - 1/2 up to sqrt(L), then
/// (L-1)/2 - (L/2) ln L + (L-1) ln(alpha).
double e_r_unbdd(AlphaL a);

/// Straight-line exponent (L-1)/2 - (L/2) ln L + (L-1) ln(alpha).
double e_sl_unbdd(AlphaL a);

/// Expurgated exponent F(alpha, L), valid branch above sqrt(2L).
double e_ex_unbdd(AlphaL a);

/// Stationary point s0 of the middle-range objective behind e_ex_unbdd;
/// s0 <= alpha/sqrt(2) exactly when alpha >= sqrt(2L).
double expurg_s0(AlphaL a);

/// Piecewise achievable exponent: random coding on [1, sqrt(L)], straight
/// line on (sqrt(L), sqrt(2L)], expurgated above.
ExponentPoint exponent_lower_bound_unbdd(AlphaL a);

/// Radius of the intersection of a shifted norm-r ball with the complement of
/// the exclusion ball, in units of sigma*sqrt(n): 0 for s <= alpha/2,
/// sqrt(s^2 - (s - alpha^2/(2s))^2) for alpha/2 < s <= alpha/sqrt(2), s beyond.
double c_of_s(double s, double alpha);

/// Exponent of the density of ||g||/sqrt(n) for a standard Gaussian vector:
/// s^2/2 - ln(s) - 1/2.
double gaussian_norm_density_exponent(double s);

/// Numeric oracle for the expurgated exponent: dense-grid minimization of the
/// middle-range objective on (alpha/2, alpha/sqrt(2)] and the outer-range
/// objective on (alpha/sqrt(2), inf). Validates the closed forms.
double numeric_exe_oracle(AlphaL a);

/// Decoding-radius scale alpha * sigma * sqrt(n) (leading term).
double r_star(double alpha, double sigma, int n);

/// Poltyrev's unique-decoding (L = 2) piecewise exponent.
double poltyrev_ud(double alpha);

}  // namespace multipack::poltyrev
