// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "multipack/errors.hpp"

namespace multipack::dmc {

/// Finite channel: row-stochastic transition matrix W (|X| x |Y|) plus an
/// input distribution Px. All values handled in nats; conversion to bits is a
/// display concern.
struct Dmc {
  std::vector<std::vector<double>> W;
  std::vector<double> Px;

  Dmc(std::vector<std::vector<double>> W_, std::vector<double> Px_);
  int nx() const { return static_cast<int>(W.size()); }
  int ny() const { return static_cast<int>(W.empty() ? 0 : W[0].size()); }
};

/// Binary symmetric channel with crossover p and uniform input.
Dmc make_bsc(double p);

/// Gallager function E0(rho) = -ln sum_y (sum_x Px(x) W(y|x)^{1/(1+rho)})^{1+rho}.
double gallager_e0(const Dmc& d, double rho);

/// Random-coding exponent max_{rho in [0,1]} { -(L-1) rho R + E0((L-1) rho) }
/// at the channel's fixed input distribution (the outer max over Px is the
/// caller's loop).
double random_coding_exponent(const Dmc& d, double R, int L);

/// Expurgation function Ex(rho) =
/// -rho ln sum_{x_0..x_{L-1}} prod_k Px(x_k) (sum_y prod_i W(y|x_i)^{1/L})^{1/rho}.
/// Guarded: throws TooLarge when |X|^L > 1e6.
double expurgated_ex(const Dmc& d, double rho, int L);

/// Expurgated exponent max_{rho in [1, rho_max]} { -(L-1) rho R + Ex(rho) }.
double expurgated_exponent(const Dmc& d, double R, int L, double rho_max = 64.0);

/// Mutual information I(X;Y) in nats under (Px, W).
double mutual_information(const Dmc& d);

inline double nats_to_bits(double v) { return v / 0.6931471805599453; }

}  // namespace multipack::dmc
