// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "multipack/bounds.hpp"

using namespace multipack;
using bounds::PackingParams;

TEST_CASE("bounded lower bound: Plotkin zeros and pinned values") {
  for (int L = 2; L <= 10; ++L)
    CHECK(std::fabs(bounds::lb_capacity_bounded({1.0, double(L - 1) / L, L})) <= 1e-12);

  // L = 2 reduces to (1/2) ln(P^2 / (4 N (P-N)))
  CHECK(bounds::lb_capacity_bounded({1.0, 0.25, 2}) ==
        doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-14));

  // large L approaches (1/2) ln(P/N) from below, gap Theta(ln L / L)
  double lim = bounds::cap_ld_bounded(1.0, 0.25);
  double big = bounds::lb_capacity_bounded({1.0, 0.25, 10000});
  CHECK(lim - big > 0.0);
  CHECK(lim - big <= 0.01);

  CHECK_THROWS_AS(bounds::lb_capacity_bounded({1.0, 0.55, 2}), DomainError);
  CHECK_THROWS_AS(PackingParams(1.0, 0.25, 1), DomainError);
  CHECK_THROWS_AS(PackingParams(-1.0, 0.25, 2), DomainError);
}

TEST_CASE("bounded upper bound and ordering") {
  CHECK(bounds::ub_capacity_bounded({1.0, 0.25, 5}) ==
        doctest::Approx(0.5 * std::log(3.2)).epsilon(1e-14));
  for (int L : {2, 3, 5})
    CHECK(std::fabs(bounds::ub_capacity_bounded({1.0, double(L - 1) / L, L})) <= 1e-15);
  CHECK(bounds::ub_capacity_bounded({1.0, 0.3, 3}) >= bounds::lb_capacity_bounded({1.0, 0.3, 3}));
}

TEST_CASE("large-L capacity limits") {
  CHECK(bounds::cap_ld_bounded(1.0, 1.0) == 0.0);
  CHECK(bounds::cap_ld_bounded(4.0, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(std::fabs(bounds::cap_ld_unbounded(1.0 / (2.0 * M_PI * M_E))) <= 1e-12);
  CHECK_THROWS_AS(bounds::cap_ld_bounded(1.0, 2.0), DomainError);
}

TEST_CASE("unbounded bounds: pinned value, exact gap, trend") {
  // N = 1/(8 pi e), L = 2: both halves equal ln(2)/2 and cancel
  CHECK(std::fabs(bounds::lb_capacity_unbounded(1.0 / (8.0 * M_PI * M_E), 2)) <= 1e-12);

  for (double N : {0.01, 0.05, 0.2}) {
    for (int L : {2, 3, 5, 17}) {
      double gap = bounds::ub_capacity_unbounded(N, L) - bounds::lb_capacity_unbounded(N, L);
      CHECK(std::fabs(gap - std::log(double(L)) / (2.0 * (L - 1))) <= 1e-12);
    }
  }
  // the upper bound vanishes at N = (L-1)/(2 pi e L)
  for (int L : {2, 3, 5})
    CHECK(std::fabs(bounds::ub_capacity_unbounded((L - 1.0) / (2.0 * M_PI * M_E * L), L)) <=
          1e-12);
  CHECK(bounds::lb_capacity_unbounded(0.01, 3) <= bounds::ub_capacity_unbounded(0.01, 3));

  // gap to the large-L limit scaled by L/ln L stays bounded
  double lo = 1e9, hi = 0.0;
  for (int L = 10; L <= 1000; L *= 2) {
    double scaled = (bounds::cap_ld_unbounded(0.05) - bounds::lb_capacity_unbounded(0.05, L)) * L /
                    std::log(double(L));
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  CHECK(hi <= 3.0 * lo);
}

TEST_CASE("derivation parameters close the expurgation chain") {
  auto dp = bounds::derivation_params({1.0, 0.5, 3});
  CHECK(dp.s == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(dp.sigma_max == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(dp.rho_of_sigma(dp.sigma_max) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dp.rate == doctest::Approx(bounds::lb_capacity_bounded({1.0, 0.5, 3})).epsilon(1e-15));

  for (int L : {2, 3, 5}) {
    for (int i = 1; i <= 20; ++i) {
      double N = (double(L - 1) / L) * i / 21.0;
      auto d = bounds::derivation_params({1.0, N, L});
      CHECK(d.s >= 0.0);
      CHECK(d.s < (1.0 - 1.0 / L) / 2.0);
      // rho doubles when sigma shrinks by sqrt(2)
      CHECK(d.rho_of_sigma(d.sigma_max / std::sqrt(2.0)) == doctest::Approx(2.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(bounds::derivation_params({1.0, 0.5, 2}), DomainError);  // at Plotkin
}

TEST_CASE("critical sigma for the unbounded chain") {
  auto sc = bounds::sigma_crit_unbounded(0.0, 2);
  CHECK(sc.alpha == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sc.sigma == doctest::Approx(1.0 / std::sqrt(8.0 * M_PI * M_E)).epsilon(1e-14));

  auto sc3 = bounds::sigma_crit_unbounded(0.7, 3);
  CHECK(sc3.alpha == doctest::Approx(std::pow(3.0, 0.75)).epsilon(1e-14));
  CHECK(sc3.alpha >= std::sqrt(3.0));
  CHECK(sc3.alpha <= std::sqrt(6.0));

  // sigma scales as e^{-dR}
  auto a = bounds::sigma_crit_unbounded(0.1, 4);
  auto b = bounds::sigma_crit_unbounded(0.6, 4);
  CHECK(b.sigma == doctest::Approx(a.sigma * std::exp(-0.5)).epsilon(1e-13));
}

TEST_CASE("both bounded bounds increase pointwise with L") {
  for (double nsr : {0.1, 0.3, 0.5}) {
    double prev_lb = -1e300, prev_ub = -1e300;
    for (int L : {3, 4, 5, 8}) {
      PackingParams p(1.0, nsr, L);
      double lb = bounds::lb_capacity_bounded(p);
      double ub = bounds::ub_capacity_bounded(p);
      CHECK(lb > prev_lb);
      CHECK(ub > prev_ub);
      prev_lb = lb;
      prev_ub = ub;
    }
  }
  // unbounded bounds also increase in L toward the limit, staying below it
  for (double N : {0.01, 0.05}) {
    double prev = -1e300;
    for (int L : {2, 3, 5, 10, 100}) {
      double lb = bounds::lb_capacity_unbounded(N, L);
      CHECK(lb > prev);
      CHECK(lb < bounds::cap_ld_unbounded(N));
      prev = lb;
    }
  }
}

TEST_CASE("rate_of_code") {
  CHECK(bounds::rate_of_code(1, 7) == 0.0);
  CHECK(bounds::rate_of_code(22026, 10) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(bounds::rate_of_code(1ULL << 20, 20) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(bounds::rate_of_code(0, 5), DomainError);
}
