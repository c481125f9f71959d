// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

#include "multipack/errors.hpp"

namespace multipack::bounds {

/// Signal power, noise power and list-plus-one size for the bounded regime.
/// The lower bound is valid for N <= (L-1)P/L (the Plotkin point, inclusive).
struct PackingParams {
  double P;
  double N;
  int L;

  PackingParams(double P_, double N_, int L_) : P(P_), N(N_), L(L_) {
    if (!(P > 0) || !(N > 0)) throw DomainError("PackingParams: P and N must be positive");
    if (L < 2) throw DomainError("PackingParams: L must be >= 2");
  }
  double plotkin_point() const { return (L - 1) * P / L; }
};

/// Achievability lower bound on the bounded-regime capacity (nats):
/// (1/2)[ln((L-1)P/(LN)) + (1/(L-1)) ln(P/(L(P-N)))], zero at the Plotkin point.
double lb_capacity_bounded(const PackingParams& p);

/// Elias-Bassalygo-type upper bound (nats): (1/2) ln((L-1)P/(LN)).
double ub_capacity_bounded(const PackingParams& p);

/// Large-L limit of the bounded capacity: (1/2) ln(P/N).
double cap_ld_bounded(double P, double N);

/// Large-L limit of the unbounded capacity: (1/2) ln(1/(2 pi e N)).
double cap_ld_unbounded(double N);

/// Unbounded-regime lower bound (nats, may be negative):
/// (1/2) ln((L-1)/(2 pi e N L)) - ln(L)/(2(L-1)).
double lb_capacity_unbounded(double N, int L);

/// Unbounded-regime upper bound: (1/2) ln((L-1)/(2 pi e N L)).
double ub_capacity_unbounded(double N, int L);

/// Critical parameters of the expurgated-exponent chain that produces the
/// bounded lower bound: the saturating s, the sigma threshold below which
/// rho >= 1, the map sigma -> rho, and the resulting rate.
struct DerivationParams {
  double s;
  double sigma_max;
  double rate;
  std::function<double(double)> rho_of_sigma;
};

/// Requires N strictly below the Plotkin point. Throws SigmaUndefined when
/// L(P-N) <= P (cannot happen on the valid domain; kept as a guard).
DerivationParams derivation_params(const PackingParams& p);

struct SigmaCrit {
  double sigma;
  double alpha;
};

/// Noise level maximizing the unbounded-chain radius at rate R, and the
/// corresponding alpha = sqrt(L^{L/(L-1)}) in [sqrt(L), sqrt(2L)].
SigmaCrit sigma_crit_unbounded(double R, int L);

/// Rate of an M-point code in dimension n: ln(M)/n.
double rate_of_code(std::uint64_t M, int n);

}  // namespace multipack::bounds
