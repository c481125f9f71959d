// SPDX-License-Identifier: Apache-2.0
#include "multipack/awgn_exponents.hpp"

#include <cmath>

#include "multipack/numerics.hpp"

namespace multipack::awgn {

namespace {

void require_snr(double snr) {
  if (!(snr > 0)) throw DomainError("awgn: snr must be positive");
}

void require_list(int L) {
  if (L < 2) throw DomainError("awgn: L must be >= 2");
}

}  // namespace

double capacity(double snr) {
  require_snr(snr);
  return 0.5 * std::log1p(snr);
}

double r_crit(double snr, int L) {
  require_snr(snr);
  require_list(L);
  const double Ld = L;
  double root = std::sqrt(1.0 - 2.0 * (Ld - 2.0) * snr / (Ld * Ld) + snr * snr / (Ld * Ld));
  return 0.5 * std::log(0.5 + snr / (2.0 * Ld) + 0.5 * root);
}

double r_x(double snr, int L) {
  require_snr(snr);
  require_list(L);
  const double Ld = L;
  double D = std::sqrt(Ld * Ld + snr * snr - 2.0 * snr * (Ld - 2.0));
  return 0.5 * (std::log((D + Ld + snr) / (2.0 * Ld)) +
                std::log((D + Ld - snr) / (2.0 * Ld)) / (Ld - 1.0));
}

double e_r(SnrRate sr) {
  require_snr(sr.snr);
  if (!(sr.R > 0)) throw DomainError("e_r: formula diverges at R = 0");
  if (sr.R > capacity(sr.snr) * (1.0 + 1e-12) + 1e-15)
    throw DomainError("e_r: R above capacity");
  const double snr = sr.snr;
  const double e2R = std::exp(2.0 * sr.R);
  const double A = std::sqrt(1.0 + 4.0 * e2R / (snr * (e2R - 1.0)));
  double first = 0.5 * std::log(e2R - 0.5 * snr * (e2R - 1.0) * (A - 1.0));
  double second = snr / (4.0 * e2R) * (e2R + 1.0 - (e2R - 1.0) * A);
  return first + second;
}

double e_sl(SnrRate sr, int L) {
  require_snr(sr.snr);
  require_list(L);
  if (sr.R < 0) throw DomainError("e_sl: R must be nonnegative");
  const double snr = sr.snr, Ld = L;
  const double S = std::sqrt((Ld - snr) * (Ld - snr) + 4.0 * snr);
  return -sr.R * (Ld - 1.0) + 0.5 * (Ld - 1.0) * std::log(Ld + snr + S) +
         0.5 * std::log(Ld - snr + S) + 0.25 * (Ld + snr - S) - 0.5 * Ld * std::log(2.0 * Ld);
}

double solve_t(double R, int L) {
  require_list(L);
  if (R < 0) throw DomainError("solve_t: R must be nonnegative");
  const double Ld = L;
  const double e2R = std::exp(2.0 * R);
  auto g = [&](double t) {
    return (Ld * t - 1.0) * e2R - (Ld - 1.0) * std::pow(t, Ld / (Ld - 1.0));
  };
  return numerics::bisect(g, numerics::Interval(1.0 / Ld, 1.0), 1e-13);
}

double e_ex(SnrRate sr, int L) {
  require_snr(sr.snr);
  require_list(L);
  if (sr.R < 0) throw DomainError("e_ex: R must be nonnegative");
  if (sr.R > r_x(sr.snr, L) * (1.0 + 1e-12) + 1e-15)
    throw DomainError("e_ex: R above r_x, expurgated bound not achievable");
  const double t = solve_t(sr.R, L);
  return sr.snr * (L * t - 1.0) / (2.0 * L * t);
}

ExponentPoint exponent_lower_bound(SnrRate sr, int L) {
  require_snr(sr.snr);
  require_list(L);
  const double C = capacity(sr.snr);
  if (sr.R < 0 || sr.R > C * (1.0 + 1e-12) + 1e-15)
    throw DomainError("exponent_lower_bound: R outside [0, capacity]");
  const double rx = r_x(sr.snr, L);
  const double rc = r_crit(sr.snr, L);
  ExponentPoint out;
  out.R = sr.R;
  if (sr.R <= rx) {
    out.regime = Regime::expurgated;
    out.value = e_ex(sr, L);
  } else if (sr.R <= rc) {
    out.regime = Regime::straight_line;
    out.value = e_sl(sr, L);
  } else {
    out.regime = Regime::random_coding;
    out.value = e_r(sr);
  }
  return out;
}

double rce_objective(double s, double gamma, SnrRate sr) {
  require_snr(sr.snr);
  if (!(s >= 0 && s < 0.5)) throw DomainError("rce_objective: need 0 <= s < 1/2 (P = 1 form)");
  if (!(gamma >= 1.0)) throw DomainError("rce_objective: need gamma >= 1");
  const double a1 = 1.0 - 2.0 * s + sr.snr / gamma;
  const double a2 = 1.0 - 2.0 * s;
  if (!(a1 > 0) || !(a2 > 0)) throw DomainError("rce_objective: log argument <= 0");
  return -sr.R * (gamma - 1.0) + 0.5 * (gamma - 1.0) * std::log(a1) + 0.5 * std::log(a2) +
         s * gamma;
}

double expurg_objective(double s, double rho, double R, double P, double sigma, int L) {
  require_list(L);
  if (!(P > 0) || !(sigma > 0)) throw DomainError("expurg_objective: P, sigma must be positive");
  if (!(s >= 0) || !(rho >= 1.0)) throw DomainError("expurg_objective: need s >= 0, rho >= 1");
  const double a2 = 1.0 - 2.0 * s * P;
  const double a1 = a2 + P / (sigma * sigma * L * rho);
  if (!(a1 > 0) || !(a2 > 0)) throw DomainError("expurg_objective: log argument <= 0");
  return R * (L - 1.0) * rho -
         rho * (s * L * P + 0.5 * std::log(a2) + 0.5 * (L - 1.0) * std::log(a1));
}

double stationary_s(double gamma, double snr) {
  require_snr(snr);
  if (!(gamma >= 1.0)) throw DomainError("stationary_s: need gamma >= 1");
  return 0.25 * (1.0 + snr / gamma -
                 std::sqrt((gamma - snr) * (gamma - snr) + 4.0 * snr) / gamma);
}

double stationary_gamma(double R, double snr) {
  require_snr(snr);
  if (!(R > 0 && R <= capacity(snr) * (1.0 + 1e-12) + 1e-15))
    throw DomainError("stationary_gamma: R outside (0, capacity]");
  const double e2R = std::exp(2.0 * R);
  return snr / (2.0 * e2R) * (1.0 + std::sqrt(1.0 + 4.0 * e2R / (snr * (e2R - 1.0))));
}

namespace gallager {

double r_x_ud(double snr) {
  require_snr(snr);
  return 0.5 * std::log(0.5 + 0.5 * std::sqrt(1.0 + snr * snr / 4.0));
}

double r_crit_ud(double snr) {
  require_snr(snr);
  return 0.5 * std::log(0.5 + snr / 4.0 + 0.5 * std::sqrt(1.0 + snr * snr / 4.0));
}

double e_high_ud(double R, double snr) {
  const double e2R = std::exp(2.0 * R);
  const double A = std::sqrt(1.0 + 4.0 * e2R / (snr * (e2R - 1.0)));
  return 0.5 * std::log(e2R - 0.5 * snr * (e2R - 1.0) * (A - 1.0)) +
         snr / (4.0 * e2R) * (e2R + 1.0 - (e2R - 1.0) * A);
}

double e_mid_ud(double R, double snr) {
  const double root = std::sqrt(1.0 + snr * snr / 4.0);
  return -R + 0.5 * std::log(0.5 + 0.5 * root) + 0.5 + snr / 4.0 - 0.5 * root;
}

double e_low_ud(double R, double snr) {
  return snr / 4.0 * (1.0 - std::sqrt(1.0 - std::exp(-2.0 * R)));
}

double exponent_ud(double R, double snr) {
  require_snr(snr);
  if (R <= r_x_ud(snr)) return e_low_ud(R, snr);
  if (R <= r_crit_ud(snr)) return e_mid_ud(R, snr);
  return e_high_ud(R, snr);
}

}  // namespace gallager

}  // namespace multipack::awgn
