// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "multipack/awgn_exponents.hpp"
#include "multipack/numerics.hpp"

using namespace multipack;
using namespace multipack::awgn;

TEST_CASE("rate thresholds match their defining equations") {
  // r_crit is where the stationary gamma hits L
  for (double snr : {0.5, 1.0, 2.0, 4.0})
    for (int L : {2, 3, 5})
      CHECK(std::fabs(stationary_gamma(r_crit(snr, L), snr) - L) <= 1e-8);

  // formula self-checks at (1, 2)
  CHECK(r_crit(1.0, 2) ==
        doctest::Approx(0.5 * std::log(0.75 + 0.5 * std::sqrt(1.25))).epsilon(1e-15));
  CHECK(r_x(1.0, 2) ==
        doctest::Approx(0.5 * std::log(0.5 + 0.5 * std::sqrt(1.25))).epsilon(1e-15));

  // L = 2 forms reduce to the unique-decoding ones
  for (double snr : {0.5, 1.0, 3.0}) {
    CHECK(std::fabs(r_x(snr, 2) - gallager::r_x_ud(snr)) <= 1e-13);
    CHECK(std::fabs(r_crit(snr, 2) - gallager::r_crit_ud(snr)) <= 1e-13);
  }

  // thresholds vanish as snr -> 0 and are ordered r_x < r_crit
  CHECK(r_crit(1e-12, 4) <= 1e-12);
  CHECK(r_x(1e-12, 4) <= 1e-12);
  for (double snr : {0.5, 1.0, 2.0, 4.0})
    for (int L : {2, 3, 5}) CHECK(r_x(snr, L) < r_crit(snr, L));

  // both thresholds move down as L grows (the stationary gamma is decreasing
  // in R, so gamma = L happens earlier for larger lists)
  CHECK(r_crit(1.0, 3) < r_crit(1.0, 2));
  CHECK(r_x(1.0, 3) < r_x(1.0, 2));
}

TEST_CASE("random-coding exponent: capacity zero and domain") {
  CHECK(std::fabs(e_r({1.0, capacity(1.0)})) <= 1e-12);
  CHECK_THROWS_AS(e_r({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(e_r({1.0, capacity(1.0) + 0.01}), DomainError);
}

TEST_CASE("straight-line exponent is affine with slope -(L-1)") {
  for (int L : {2, 3, 5}) {
    double base = e_sl({1.0, 0.05}, L);
    double shifted = e_sl({1.0, 0.05 + 0.01}, L);
    CHECK(std::fabs((base - shifted) - (L - 1) * 0.01) <= 1e-12);
  }
  // L = 2 at R = 0 equals the unique-decoding middle form exactly
  CHECK(std::fabs(e_sl({1.0, 0.0}, 2) - gallager::e_mid_ud(0.0, 1.0)) <= 1e-12);
}

TEST_CASE("solve_t: closed forms and residuals") {
  for (int L : {2, 3, 5}) CHECK(solve_t(0.0, L) == doctest::Approx(1.0).epsilon(1e-12));

  double R = 0.5 * std::log(2.0);
  CHECK(std::fabs(solve_t(R, 2) - (2.0 - std::sqrt(2.0))) <= 1e-11);

  double t = solve_t(0.1, 3);
  CHECK(t > 1.0 / 3.0);
  CHECK(t < 1.0);
  double resid = (3 * t - 1) * std::exp(0.2) - 2.0 * std::pow(t, 1.5);
  CHECK(std::fabs(resid) <= 1e-10);
}

TEST_CASE("expurgated exponent values and domain") {
  CHECK(e_ex({1.0, 0.0}, 2) == doctest::Approx(0.25).epsilon(1e-12));
  for (int L : {2, 3, 5})
    for (double snr : {0.5, 2.0})
      CHECK(e_ex({snr, 0.0}, L) == doctest::Approx(snr * (L - 1.0) / (2.0 * L)).epsilon(1e-12));
  CHECK_THROWS_AS(e_ex({1.0, r_x(1.0, 3) + 0.01}, 3), DomainError);
}

TEST_CASE("piecewise exponent: regimes, continuity, capacity zero") {
  const double snr = 1.0;
  const int L = 3;
  auto at = [&](double R) { return exponent_lower_bound({snr, R}, L); };

  CHECK(at(0.0).regime == Regime::expurgated);
  CHECK(at(0.0).value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(at(capacity(snr)).regime == Regime::random_coding);
  CHECK(std::fabs(at(capacity(snr)).value) <= 1e-12);

  double rc = r_crit(snr, L), rx = r_x(snr, L);
  CHECK(at(0.5 * rx).regime == Regime::expurgated);
  CHECK(at(0.5 * (rx + rc)).regime == Regime::straight_line);
  CHECK(at(0.5 * (rc + capacity(snr))).regime == Regime::random_coding);
  CHECK(std::fabs(e_r({snr, rc}) - e_sl({snr, rc}, L)) <= 1e-7);
  CHECK(std::fabs(e_ex({snr, rx}, L) - e_sl({snr, rx}, L)) <= 1e-7);

  CHECK_THROWS_AS(exponent_lower_bound({snr, capacity(snr) + 0.01}, L), DomainError);
}

TEST_CASE("expurgated touches the straight line tangentially") {
  for (double snr : {0.5, 1.0, 2.0}) {
    for (int L : {2, 3, 5}) {
      double rx = r_x(snr, L);
      for (double f : {0.2, 0.5, 0.8})
        CHECK(e_ex({snr, f * rx}, L) >= e_sl({snr, f * rx}, L) - 1e-12);
      CHECK(std::fabs(e_ex({snr, rx}, L) - e_sl({snr, rx}, L)) <= 1e-7);
    }
  }
}

TEST_CASE("objectives reproduce the closed forms at their stationary points") {
  SnrRate sr{1.0, 0.3};
  double g = stationary_gamma(sr.R, sr.snr);
  double s = stationary_s(g, sr.snr);
  CHECK(std::fabs(rce_objective(s, g, sr) - e_r(sr)) <= 1e-9);

  // capacity: stationary pair collapses to (0, 1) and the objective vanishes
  CHECK(std::fabs(stationary_gamma(capacity(1.0), 1.0) - 1.0) <= 1e-12);
  CHECK(std::fabs(stationary_s(1.0, 1.0)) <= 1e-15);
  CHECK(std::fabs(rce_objective(0.0, 1.0, {1.0, capacity(1.0)})) <= 1e-15);

  // expurgation chain at (s, rho) from the critical equations
  for (int L : {2, 3, 5}) {
    double snr = 2.0;
    double R = 0.5 * r_x(snr, L);
    double t = solve_t(R, L);
    double s_crit = (1.0 - t) / 2.0;
    double rho = (L * t - 1.0) * snr / (L * L * (1.0 - t) * t);
    CHECK(rho >= 1.0);
    double obj = expurg_objective(s_crit, rho, R, 1.0, 1.0 / std::sqrt(snr), L);
    CHECK(std::fabs(obj + e_ex({snr, R}, L)) <= 1e-9);
  }

  CHECK_THROWS_AS(rce_objective(0.6, 1.0, sr), DomainError);
  CHECK_THROWS_AS(expurg_objective(0.0, 0.5, 0.1, 1.0, 1.0, 2), DomainError);
}

TEST_CASE("2-D optimization of the objective reproduces e_r at snr=1, R=0.3") {
  SnrRate sr{1.0, 0.3};
  auto neg = [&](double s, double g) { return -rce_objective(s, g, sr); };
  auto res = numerics::minimize_2d(neg, numerics::Interval(0.0, 0.499999),
                                   numerics::Interval(1.0, 8.0));
  CHECK(std::fabs(-res.value - e_r(sr)) <= 1e-5 * std::max(1e-3, e_r(sr)));
}

TEST_CASE("gallager reference forms agree where they overlap") {
  // e_high_ud is the same display as e_r
  for (double R : {0.2, 0.25, 0.3})
    CHECK(std::fabs(gallager::e_high_ud(R, 1.0) - e_r({1.0, R})) <= 1e-14);
  // piecewise reference matches the generic L = 2 curve on a grid
  for (int i = 0; i <= 100; ++i) {
    double R = capacity(1.0) * i / 100.0;
    CHECK(std::fabs(exponent_lower_bound({1.0, R}, 2).value -
                    gallager::exponent_ud(R, 1.0)) <= 1e-10);
  }
}
