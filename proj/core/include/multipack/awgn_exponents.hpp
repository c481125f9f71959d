// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "multipack/errors.hpp"
#include "multipack/regime.hpp"

namespace multipack::awgn {

/// Operating point of the power-constrained AWGN channel: snr = P/sigma^2 and
/// the rate R in nats (0 <= R <= capacity = (1/2) ln(1+snr)).
struct SnrRate {
  double snr;
  double R;
};

struct ExponentPoint {
  double R;
  double value;
  Regime regime;
};

double capacity(double snr);

/// Rate threshold between the random-coding and straight-line regimes.
/// Decreasing in L: the stationary gamma hits L at smaller rates for bigger lists.
double r_crit(double snr, int L);

/// Rate threshold between the straight-line and expurgated regimes.
double r_x(double snr, int L);

/// Random-coding exponent (valid for r_crit <= R <= capacity; L-free form).
/// Throws DomainError at R <= 0 where the formula's inner term diverges.
double e_r(SnrRate sr);

/// Straight-line exponent, affine in R with slope -(L-1).
double e_sl(SnrRate sr, int L);

/// Unique root t in [1/L, 1] of (Lt - 1) e^{2R} = (L-1) t^{L/(L-1)}.
double solve_t(double R, int L);

/// Expurgated exponent snr(Lt-1)/(2Lt); requires 0 <= R <= r_x(snr, L).
double e_ex(SnrRate sr, int L);

/// Piecewise achievable exponent: expurgated for R <= r_x, straight-line for
/// r_x < R <= r_crit, random coding above. Throws DomainError above capacity.
ExponentPoint exponent_lower_bound(SnrRate sr, int L);

/// Random-coding objective in snr-normalized form (P = 1, sigma^2 = 1/snr):
/// -R(gamma-1) + ((gamma-1)/2) ln(1 - 2s + snr/gamma) + (1/2) ln(1-2s) + s*gamma.
/// Its stationary pair is an interior maximum; the closed forms equal the
/// maximum over s in [0, 1/2) x gamma in [1, L].
double rce_objective(double s, double gamma, SnrRate sr);

/// Expurgation objective in (P, sigma) form:
/// R(L-1)rho - rho [ sLP + (1/2) ln(1-2sP) + ((L-1)/2) ln(1-2sP + P/(sigma^2 L rho)) ].
/// The expurgated exponent is the negated minimum over s >= 0, rho >= 1.
double expurg_objective(double s, double rho, double R, double P, double sigma, int L);

/// Stationary s of the random-coding objective at fixed gamma (P = 1 form).
double stationary_s(double gamma, double snr);

/// Stationary gamma of the random-coding objective at rate R; equals 1 at
/// capacity and L at r_crit(snr, L).
double stationary_gamma(double R, double snr);

/// Unique-decoding (L = 2) reference forms.
namespace gallager {

double r_x_ud(double snr);
double r_crit_ud(double snr);
double e_high_ud(double R, double snr);
double e_mid_ud(double R, double snr);
double e_low_ud(double R, double snr);

/// Piecewise unique-decoding exponent over [0, capacity].
double exponent_ud(double R, double snr);

}  // namespace gallager

}  // namespace multipack::awgn
