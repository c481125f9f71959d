// SPDX-License-Identifier: Apache-2.0
#include "multipack/bounds.hpp"

#include <cmath>

namespace multipack::bounds {

namespace {
constexpr double kTwoPiE = 2.0 * M_PI * M_E;
}

double lb_capacity_bounded(const PackingParams& p) {
  if (p.N > p.plotkin_point())
    throw DomainError("lb_capacity_bounded: N beyond the Plotkin point (L-1)P/L");
  const double L = p.L;
  return 0.5 * (std::log((L - 1.0) * p.P / (L * p.N)) +
                std::log(p.P / (L * (p.P - p.N))) / (L - 1.0));
}

double ub_capacity_bounded(const PackingParams& p) {
  if (p.N > p.plotkin_point())
    throw DomainError("ub_capacity_bounded: N beyond the Plotkin point (L-1)P/L");
  return 0.5 * std::log((p.L - 1.0) * p.P / (p.L * p.N));
}

double cap_ld_bounded(double P, double N) {
  if (!(P >= N && N > 0)) throw DomainError("cap_ld_bounded: need P >= N > 0");
  return 0.5 * std::log(P / N);
}

double cap_ld_unbounded(double N) {
  if (!(N > 0)) throw DomainError("cap_ld_unbounded: N must be positive");
  return 0.5 * std::log(1.0 / (kTwoPiE * N));
}

double lb_capacity_unbounded(double N, int L) {
  if (!(N > 0) || L < 2) throw DomainError("lb_capacity_unbounded: need N > 0, L >= 2");
  return 0.5 * std::log((L - 1.0) / (kTwoPiE * N * L)) - std::log(double(L)) / (2.0 * (L - 1.0));
}

double ub_capacity_unbounded(double N, int L) {
  if (!(N > 0) || L < 2) throw DomainError("ub_capacity_unbounded: need N > 0, L >= 2");
  return 0.5 * std::log((L - 1.0) / (kTwoPiE * N * L));
}

DerivationParams derivation_params(const PackingParams& p) {
  if (!(p.N < p.plotkin_point()))
    throw DomainError("derivation_params: N must be strictly below the Plotkin point");
  const double L = p.L, P = p.P, N = p.N;
  const double denom = L * (P - N) - P;
  if (!(denom > 0)) throw SigmaUndefined("derivation_params: L(P-N) <= P");

  DerivationParams out;
  out.s = ((L - 1.0) * P - L * N) / (2.0 * L * (P - N) * P);
  out.sigma_max = std::sqrt(N * (P - N) / denom);
  out.rate = lb_capacity_bounded(p);
  out.rho_of_sigma = [N, P, denom](double sigma) { return N * (P - N) / (denom * sigma * sigma); };
  return out;
}

SigmaCrit sigma_crit_unbounded(double R, int L) {
  if (L < 2) throw DomainError("sigma_crit_unbounded: L must be >= 2");
  const double lnL = std::log(double(L));
  SigmaCrit out;
  out.sigma = std::sqrt(std::exp(-L / (L - 1.0) * lnL - std::log(kTwoPiE) - 2.0 * R));
  out.alpha = std::sqrt(std::exp(L / (L - 1.0) * lnL));
  return out;
}

double rate_of_code(std::uint64_t M, int n) {
  if (M < 1 || n < 1) throw DomainError("rate_of_code: need M >= 1, n >= 1");
  return std::log(static_cast<double>(M)) / n;
}

}  // namespace multipack::bounds
