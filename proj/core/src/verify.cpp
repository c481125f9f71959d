// SPDX-License-Identifier: Apache-2.0
#include "multipack/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

#include "multipack/awgn_exponents.hpp"
#include "multipack/bounds.hpp"
#include "multipack/dmc_exponents.hpp"
#include "multipack/montecarlo.hpp"
#include "multipack/numerics.hpp"
#include "multipack/poltyrev_exponents.hpp"

namespace multipack::verify {

namespace {

using geometry::PointSet;
using geometry::Vec;
using numerics::Interval;
using numerics::RandomStream;
using numerics::SeedSpec;

double rel_dev(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-12});
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

CheckResult make(const std::string& name, bool pass, double dev, std::string note = "") {
  return CheckResult{name, pass, dev, std::move(note)};
}

// Grid shared by several exponent checks.
const double kSnrGrid[] = {0.5, 1.0, 2.0, 4.0};
const int kListGrid[] = {2, 3, 5};

// Oracle for the constrained random-coding/straight-line exponents: maximum
// of the displayed objective over s in [0, 1/2) x gamma in [1, L], obtained
// by running minimize_2d on the negated objective.
double rce_oracle(double snr, double R, int L) {
  awgn::SnrRate sr{snr, R};
  auto neg = [&](double s, double g) { return -awgn::rce_objective(s, g, sr); };
  auto res = numerics::minimize_2d(neg, Interval(0.0, 0.499999), Interval(1.0, double(L)));
  return -res.value;
}

// Oracle for the constrained expurgated exponent: negated minimum of the
// expurgation objective over s x rho (P = 1, sigma^2 = 1/snr).
double exprg_oracle(double snr, double R, int L) {
  const double sigma = 1.0 / std::sqrt(snr);
  auto obj = [&](double s, double rho) {
    return awgn::expurg_objective(s, rho, R, 1.0, sigma, L);
  };
  const double s_hi = (1.0 - 1.0 / L) / 2.0 - 1e-9;
  auto res = numerics::minimize_2d(obj, Interval(0.0, s_hi), Interval(1.0, 16.0));
  return -res.value;
}

}  // namespace

double chi_square_quantile(double p, int df) {
  // Wilson-Hilferty: chi2_p(df) ~ df (1 - 2/(9 df) + z_p sqrt(2/(9 df)))^3.
  if (!(p > 0 && p < 1) || df < 1) throw DomainError("chi_square_quantile: bad arguments");
  // inverse normal CDF (Acklam's rational approximation, |eps| < 1.2e-9)
  auto inv_norm = [](double q) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double x;
    if (q < plow) {
      double u = std::sqrt(-2 * std::log(q));
      x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
          ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1);
    } else if (q <= phigh) {
      double u = q - 0.5, r = u * u;
      x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
          (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
      double u = std::sqrt(-2 * std::log(1 - q));
      x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
          ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1);
    }
    return x;
  };
  double z = inv_norm(p);
  double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
  return df * t * t * t;
}

double miniball_bruteforce_radius_sq(const PointSet& pts) {
  const int m = pts.size();
  const int n = pts.dim;
  // Circumcenter of a subset within its affine hull, by the Gram system.
  auto circumball = [&](const std::vector<int>& sub, Vec& center, double& r2) -> bool {
    const Vec& p0 = pts.points[sub[0]];
    const int k = static_cast<int>(sub.size()) - 1;
    if (k == 0) {
      center = p0;
      r2 = 0.0;
      return true;
    }
    std::vector<Vec> d(k, Vec(n));
    for (int i = 0; i < k; ++i)
      for (int t = 0; t < n; ++t) d[i][t] = pts.points[sub[i + 1]][t] - p0[t];
    std::vector<std::vector<double>> A(k, std::vector<double>(k + 1));
    double scale = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        A[i][j] = 2.0 * geometry::dot(d[i], d[j]);
        scale = std::max(scale, std::fabs(A[i][j]));
      }
      A[i][k] = geometry::dot(d[i], d[i]);
    }
    for (int col = 0; col < k; ++col) {
      int piv = col;
      for (int r = col + 1; r < k; ++r)
        if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
      if (std::fabs(A[piv][col]) <= 1e-12 * std::max(scale, 1e-300)) return false;
      std::swap(A[piv], A[col]);
      for (int r = 0; r < k; ++r) {
        if (r == col) continue;
        double mfac = A[r][col] / A[col][col];
        for (int cc = col; cc <= k; ++cc) A[r][cc] -= mfac * A[col][cc];
      }
    }
    center = p0;
    for (int i = 0; i < k; ++i) {
      double lam = A[i][k] / A[i][i];
      for (int t = 0; t < n; ++t) center[t] += lam * d[i][t];
    }
    r2 = geometry::dist_sq(center, p0);
    return true;
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> sub;
  std::function<void(int)> rec = [&](int next) {
    if (!sub.empty()) {
      Vec c;
      double r2;
      if (circumball(sub, c, r2) && r2 < best) {
        bool all_in = true;
        for (int i = 0; i < m && all_in; ++i)
          if (geometry::dist_sq(c, pts.points[i]) > r2 * (1 + 1e-12) + 1e-24) all_in = false;
        if (all_in) best = r2;
      }
    }
    if (static_cast<int>(sub.size()) > n) return;
    for (int i = next; i < m; ++i) {
      sub.push_back(i);
      rec(i + 1);
      sub.pop_back();
    }
  };
  rec(0);
  return best;
}

// ---------------------------------------------------------------- bounds ---

CheckResult check_plotkin_zero() {
  double worst = 0.0;
  for (int L = 2; L <= 10; ++L) {
    bounds::PackingParams p(1.0, double(L - 1) / L, L);
    worst = std::max(worst, std::fabs(bounds::lb_capacity_bounded(p)));
  }
  return make("bounds/plotkin-zero", worst <= 1e-12, worst, "L in 2..10");
}

CheckResult check_bound_ordering_bounded() {
  double worst = -1.0;  // most negative (ub - lb) seen; negative means violation
  bool monotone = true;
  for (int L = 2; L <= 10; ++L) {
    double prev_lb = std::numeric_limits<double>::infinity();
    double prev_ub = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 200; ++i) {
      double nsr = 0.01 + (double(L - 1) / L - 0.02) * i / 199.0;
      bounds::PackingParams p(1.0, nsr, L);
      double lb = bounds::lb_capacity_bounded(p);
      double ub = bounds::ub_capacity_bounded(p);
      worst = std::max(worst, lb - ub);
      if (lb > prev_lb + 1e-12 || ub > prev_ub + 1e-12) monotone = false;
      prev_lb = lb;
      prev_ub = ub;
    }
  }
  return make("bounds/ordering-bounded", worst <= 1e-12 && monotone, std::max(worst, 0.0),
              "lb <= ub and both decreasing in N/P");
}

CheckResult check_bound_ordering_unbounded() {
  double worst_order = 0.0, worst_gap = 0.0;
  for (int L : kListGrid) {
    for (int i = 0; i < 200; ++i) {
      double N = 0.001 + 0.2 * i / 199.0;
      double lb = bounds::lb_capacity_unbounded(N, L);
      double ub = bounds::ub_capacity_unbounded(N, L);
      worst_order = std::max(worst_order, lb - ub);
      double gap = ub - lb;
      worst_gap = std::max(worst_gap, std::fabs(gap - std::log(double(L)) / (2.0 * (L - 1))));
    }
  }
  bool pass = worst_order <= 0.0 && worst_gap <= 1e-12;
  return make("bounds/ordering-unbounded", pass, std::max(worst_order, worst_gap),
              "gap identically ln(L)/(2(L-1))");
}

CheckResult check_large_l_trend() {
  // (C_LD - lb) * L / ln L must stay within a factor-3 band over L in 10..1000.
  double lo_b = std::numeric_limits<double>::infinity(), hi_b = 0.0;
  double lo_u = std::numeric_limits<double>::infinity(), hi_u = 0.0;
  for (int L = 10; L <= 1000; L += (L < 100 ? 1 : 25)) {
    bounds::PackingParams p(1.0, 0.25, L);
    double gap_b = bounds::cap_ld_bounded(1.0, 0.25) - bounds::lb_capacity_bounded(p);
    double scaled_b = gap_b * L / std::log(double(L));
    lo_b = std::min(lo_b, scaled_b);
    hi_b = std::max(hi_b, scaled_b);
    double gap_u = bounds::cap_ld_unbounded(0.05) - bounds::lb_capacity_unbounded(0.05, L);
    double scaled_u = gap_u * L / std::log(double(L));
    lo_u = std::min(lo_u, scaled_u);
    hi_u = std::max(hi_u, scaled_u);
  }
  bool pass = hi_b <= 3.0 * lo_b && hi_u <= 3.0 * lo_u && lo_b > 0 && lo_u > 0;
  double dev = std::max(hi_b / lo_b, hi_u / lo_u);
  return make("bounds/large-L-trend", pass, dev,
              "scaled gap band ratio " + fmt("%.3f", dev) + " (limit 3)");
}

CheckResult check_derivation_chain() {
  double worst = 0.0;
  bool constraint_ok = true;
  for (int L : {2, 3, 4, 5, 8}) {
    for (int i = 1; i <= 40; ++i) {
      double nsr = (double(L - 1) / L) * i / 41.0;
      bounds::PackingParams p(1.0, nsr, L);
      auto dp = bounds::derivation_params(p);
      // r-expr with t = 1 - 2Ps must reproduce the closed-form rate
      double t = 1.0 - 2.0 * p.P * dp.s;
      double r_of_t = 0.5 * (std::log((L - 1.0) * t / (L * t - 1.0)) + std::log(t) / (L - 1.0));
      worst = std::max(worst, std::fabs(r_of_t - dp.rate));
      worst = std::max(worst, std::fabs(dp.rate - bounds::lb_capacity_bounded(p)));
      if (!(dp.s >= 0 && dp.s < (1.0 - 1.0 / L) / (2.0 * p.P))) constraint_ok = false;
      worst = std::max(worst, std::fabs(dp.rho_of_sigma(dp.sigma_max) - 1.0));
    }
  }
  return make("bounds/derivation-chain", worst <= 1e-12 && constraint_ok, worst,
              "rate closure, s-range, rho(sigma_max)=1");
}

CheckResult check_sigma_crit() {
  double worst = 0.0;
  bool in_range = true;
  for (int L : {2, 3, 5, 10}) {
    for (double R : {0.0, 0.1, 0.5}) {
      auto sc = bounds::sigma_crit_unbounded(R, L);
      double alpha_ref = std::pow(double(L), L / (2.0 * (L - 1.0)));
      worst = std::max(worst, std::fabs(sc.alpha - alpha_ref));
      if (!(sc.alpha >= std::sqrt(double(L)) - 1e-12 &&
            sc.alpha <= std::sqrt(2.0 * L) + 1e-12))
        in_range = false;
      // doubling R shrinks sigma by e^{-dR}
      auto sc2 = bounds::sigma_crit_unbounded(R + 0.25, L);
      worst = std::max(worst, std::fabs(sc2.sigma - sc.sigma * std::exp(-0.25)));
    }
  }
  return make("bounds/sigma-crit", worst <= 1e-12 && in_range, worst,
              "alpha = L^{L/(2(L-1))} in [sqrt(L), sqrt(2L)]");
}

// ------------------------------------------------------------- exponents ---

CheckResult check_gallager_reduction() {
  const double snr = 1.0;
  const double C = awgn::capacity(snr);
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    double R = C * i / 399.0;
    double generic = awgn::exponent_lower_bound({snr, R}, 2).value;
    double reference = awgn::gallager::exponent_ud(R, snr);
    worst = std::max(worst, std::fabs(generic - reference));
  }
  return make("exponents/gallager-reduction", worst <= 1e-10, worst,
              "L=2 piecewise vs unique-decoding forms, 400 rates");
}

CheckResult check_poltyrev_reduction() {
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    double alpha = 1.0 + 3.0 * i / 399.0;
    double generic = poltyrev::exponent_lower_bound_unbdd({alpha, 2}).value;
    double reference = poltyrev::poltyrev_ud(alpha);
    worst = std::max(worst, std::fabs(generic - reference));
  }
  return make("exponents/poltyrev-reduction", worst <= 1e-10, worst,
              "L=2 piecewise vs Poltyrev forms, alpha in [1,4]");
}

CheckResult check_rce_oracle(const Options& opt) {
  double worst = 0.0;
  for (double snr : kSnrGrid) {
    for (int L : kListGrid) {
      const double C = awgn::capacity(snr);
      const double rc = awgn::r_crit(snr, L);
      const double rx = awgn::r_x(snr, L);
      for (int i = 0; i < 20; ++i) {  // random-coding regime
        double R = rc + (C - rc) * (0.05 + 0.90 * i / 19.0);
        double closed = awgn::e_r({snr, R}) + opt.inject_bias;
        worst = std::max(worst, rel_dev(closed, rce_oracle(snr, R, L)));
      }
      for (int i = 0; i < 20; ++i) {  // straight-line regime
        double R = rx + (rc - rx) * (0.05 + 0.90 * i / 19.0);
        double closed = awgn::e_sl({snr, R}, L) + opt.inject_bias;
        worst = std::max(worst, rel_dev(closed, rce_oracle(snr, R, L)));
      }
    }
  }
  return make("exponents/rce-oracle", worst <= 1e-5, worst,
              "closed forms vs 2-D optimization of the random-coding objective");
}

CheckResult check_exprg_oracle(const Options& opt) {
  double worst = 0.0;
  for (double snr : kSnrGrid) {
    for (int L : kListGrid) {
      const double rx = awgn::r_x(snr, L);
      for (int i = 0; i < 20; ++i) {
        double R = rx * (0.08 + 0.90 * i / 19.0);
        double closed = awgn::e_ex({snr, R}, L) + opt.inject_bias;
        worst = std::max(worst, rel_dev(closed, exprg_oracle(snr, R, L)));
      }
    }
  }
  return make("exponents/exprg-oracle", worst <= 1e-5, worst,
              "closed forms vs 2-D optimization of the expurgation objective");
}

CheckResult check_exe_unbdd_oracle(const Options& opt) {
  double worst = 0.0;
  for (int L : kListGrid) {
    const double lo = std::sqrt(2.0 * L) + 0.1;
    const double hi = 4.0 * std::sqrt(double(L));
    for (int i = 0; i < 12; ++i) {
      double alpha = lo + (hi - lo) * i / 11.0;
      double closed = poltyrev::e_ex_unbdd({alpha, L}) + opt.inject_bias;
      double oracle = poltyrev::numeric_exe_oracle({alpha, L});
      worst = std::max(worst, rel_dev(closed, oracle));
    }
  }
  return make("exponents/exe-unbdd-oracle", worst <= 1e-5, worst,
              "closed expurgated form vs dense-grid minimization");
}

CheckResult check_regime_continuity() {
  double worst_c = 0.0, worst_u = 0.0, worst_anchor = 0.0;
  for (double snr : kSnrGrid) {
    for (int L : kListGrid) {
      double rc = awgn::r_crit(snr, L), rx = awgn::r_x(snr, L);
      worst_c = std::max(worst_c, std::fabs(awgn::e_r({snr, rc}) - awgn::e_sl({snr, rc}, L)));
      worst_c = std::max(worst_c, std::fabs(awgn::e_ex({snr, rx}, L) - awgn::e_sl({snr, rx}, L)));
    }
  }
  for (int L : kListGrid) {
    double sL = std::sqrt(double(L)), s2L = std::sqrt(2.0 * L);
    double rnd = 0.5 * sL * sL - std::log(sL) - 0.5;
    worst_u = std::max(worst_u, std::fabs(rnd - poltyrev::e_sl_unbdd({sL, L})));
    worst_u = std::max(worst_u,
                       std::fabs(poltyrev::e_sl_unbdd({s2L, L}) - poltyrev::e_ex_unbdd({s2L, L})));
    double alpha_crit = std::sqrt(std::pow(double(L), double(L) / (L - 1.0)));
    double at_crit = poltyrev::exponent_lower_bound_unbdd({alpha_crit, L}).value;
    worst_anchor = std::max(worst_anchor, std::fabs(at_crit - 0.5 * (L - 1.0)));
  }
  bool pass = worst_c <= 1e-7 && worst_u <= 1e-8 && worst_anchor <= 1e-10;
  return make("exponents/regime-continuity", pass, std::max({worst_c, worst_u, worst_anchor}),
              "joints at r_crit/r_x, sqrt(L)/sqrt(2L), anchor (L-1)/2");
}

CheckResult check_capacity_zeros() {
  double worst = 0.0;
  for (double snr : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0})
    worst = std::max(worst, std::fabs(awgn::e_r({snr, awgn::capacity(snr)})));
  bool unbdd_zero = poltyrev::e_r_unbdd({1.0, 3}) == 0.0;
  return make("exponents/capacity-zeros", worst <= 1e-10 && unbdd_zero, worst,
              "E_r at capacity, E_r_unbdd at alpha=1");
}

CheckResult check_stationary_consistency() {
  double worst = 0.0;
  {
    awgn::SnrRate sr{1.0, 0.3};
    double g = awgn::stationary_gamma(sr.R, sr.snr);
    double s = awgn::stationary_s(g, sr.snr);
    worst = std::max(worst, std::fabs(awgn::rce_objective(s, g, sr) - awgn::e_r(sr)));
  }
  for (double snr : kSnrGrid)
    for (int L : kListGrid)
      worst = std::max(worst, std::fabs(awgn::stationary_gamma(awgn::r_crit(snr, L), snr) - L));
  // expurgation chain: objective at the critical (s, rho) equals -snr(Lt-1)/(2Lt)
  for (double snr : {1.0, 2.0}) {
    for (int L : kListGrid) {
      double R = 0.5 * awgn::r_x(snr, L);
      double t = awgn::solve_t(R, L);
      double s = (1.0 - t) / 2.0;  // P = 1
      double sigma = 1.0 / std::sqrt(snr);
      double rho = (L * t - 1.0) * snr / (L * L * (1.0 - t) * t);
      double obj = awgn::expurg_objective(s, rho, R, 1.0, sigma, L);
      double ee = awgn::e_ex({snr, R}, L);
      worst = std::max(worst, std::fabs(obj + ee));
    }
  }
  return make("exponents/stationary-consistency", worst <= 1e-9, worst,
              "stationary pairs reproduce the closed forms");
}

CheckResult check_awgn_l_monotonicity() {
  double worst_mono = 0.0, worst_same = 0.0;
  for (double snr : kSnrGrid) {
    const double C = awgn::capacity(snr);
    const double rc2 = awgn::r_crit(snr, 2);
    for (int i = 0; i <= 50; ++i) {
      double R = C * i / 50.0;
      double e2 = awgn::exponent_lower_bound({snr, R}, 2).value;
      double e3 = awgn::exponent_lower_bound({snr, R}, 3).value;
      double e5 = awgn::exponent_lower_bound({snr, R}, 5).value;
      worst_mono = std::max({worst_mono, e2 - e3, e3 - e5});
      if (R >= rc2) worst_same = std::max({worst_same, std::fabs(e3 - e2), std::fabs(e5 - e2)});
    }
  }
  bool pass = worst_mono <= 1e-9 && worst_same <= 1e-9;
  return make("exponents/L-monotonicity", pass, std::max(worst_mono, worst_same),
              "nondecreasing in L; identical above r_crit(snr,2)");
}

CheckResult check_awgn_curve_shape() {
  double worst_inc = 0.0, worst_jump = 0.0, worst_alpha = 0.0;
  for (double snr : kSnrGrid) {
    for (int L : kListGrid) {
      const double C = awgn::capacity(snr);
      double prev = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 400; ++i) {
        double R = C * i / 400.0;
        double e = awgn::exponent_lower_bound({snr, R}, L).value;
        if (e > prev) worst_inc = std::max(worst_inc, e - prev);
        prev = e;
      }
      // regime joints probed from both sides (the slope is finite there)
      for (double Rb : {awgn::r_x(snr, L), awgn::r_crit(snr, L)}) {
        double eps = 1e-9;
        double left = awgn::exponent_lower_bound({snr, Rb - eps}, L).value;
        double right = awgn::exponent_lower_bound({snr, Rb + eps}, L).value;
        worst_jump = std::max(worst_jump, std::fabs(left - right));
      }
      // unconstrained curve: nondecreasing in alpha, continuous joints
      double aprev = -1.0;
      for (int i = 0; i <= 400; ++i) {
        double alpha = 1.0 + (4.0 * std::sqrt(double(L)) - 1.0) * i / 400.0;
        double e = poltyrev::exponent_lower_bound_unbdd({alpha, L}).value;
        if (aprev >= 0 && e < aprev - 1e-10) worst_alpha = std::max(worst_alpha, aprev - e);
        aprev = e;
      }
    }
  }
  bool pass = worst_inc <= 1e-9 && worst_jump <= 1e-7 && worst_alpha <= 1e-10;
  return make("exponents/curve-shape", pass, std::max({worst_inc, worst_jump, worst_alpha}),
              "nonincreasing in R, bounded jumps, increasing in alpha");
}

CheckResult check_dmc_sanity() {
  double worst = 0.0;
  auto useless = dmc::make_bsc(0.5);
  auto clean = dmc::make_bsc(0.0);
  auto bsc01 = dmc::make_bsc(0.1);
  worst = std::max(worst, std::fabs(dmc::gallager_e0(bsc01, 0.0)));
  worst = std::max(worst, std::fabs(dmc::gallager_e0(useless, 1.0)));
  worst = std::max(worst, std::fabs(dmc::gallager_e0(clean, 1.0) - std::log(2.0)));
  worst = std::max(worst, std::fabs(dmc::expurgated_ex(useless, 1.0, 2)));
  worst = std::max(worst, std::fabs(dmc::expurgated_ex(clean, 1.0, 2) - std::log(2.0)));
  const double mi = dmc::mutual_information(bsc01);
  double at_mi = dmc::random_coding_exponent(bsc01, mi, 2);
  bool vanish = std::fabs(at_mi) <= 1e-6;
  bool mono_L = dmc::random_coding_exponent(bsc01, 0.05, 3) >=
                dmc::random_coding_exponent(bsc01, 0.05, 2) - 1e-12;
  bool low_rate = dmc::expurgated_exponent(bsc01, 0.01, 2) >=
                  dmc::random_coding_exponent(bsc01, 0.01, 2) - 1e-12;
  bool pass = worst <= 1e-12 && vanish && mono_L && low_rate;
  return make("exponents/dmc-sanity", pass, std::max(worst, std::fabs(at_mi)),
              "E0 anchors, zero at mutual information, list/low-rate dominance");
}

// -------------------------------------------------------------- geometry ---

CheckResult check_geometry_oracle(const Options& opt) {
  RandomStream rs({opt.seed, 101});
  double worst = 0.0;
  for (int inst = 0; inst < 1000; ++inst) {
    int m = 1 + static_cast<int>(rs.uniform() * 6);
    int n = 1 + static_cast<int>(rs.uniform() * 8);
    PointSet pts;
    pts.dim = n;
    double scale = std::exp(rs.uniform(-1.0, 2.0));
    for (int i = 0; i < m; ++i) {
      Vec p(n);
      for (int t = 0; t < n; ++t) p[t] = scale * rs.gaussian();
      pts.points.push_back(std::move(p));
    }
    double fast = geometry::chebyshev_ball(pts).radius_sq;
    double brute = miniball_bruteforce_radius_sq(pts);
    worst = std::max(worst, std::fabs(fast - brute) / std::max(1.0, brute));
  }
  // obtuse triangle: the ball spans the longest edge exactly
  PointSet obtuse(std::vector<Vec>{{0, 0}, {3, 0}, {1, 0.1}});
  auto ball = geometry::chebyshev_ball(obtuse);
  double obtuse_dev = std::fabs(ball.radius_sq - 2.25);
  bool support_far = ball.support == std::vector<int>{0, 1};
  bool pass = worst <= 1e-9 && obtuse_dev == 0.0 && support_far;
  return make("geometry/miniball-oracle", pass, std::max(worst, obtuse_dev),
              "1000 random instances vs subset-circumsphere enumeration");
}

CheckResult check_geometry_properties(const Options& opt) {
  RandomStream rs({opt.seed, 102});
  double worst = 0.0;
  for (int inst = 0; inst < 300; ++inst) {
    int m = 2 + static_cast<int>(rs.uniform() * 5);
    int n = 2 + static_cast<int>(rs.uniform() * 5);
    PointSet pts;
    pts.dim = n;
    for (int i = 0; i < m; ++i) {
      Vec p(n);
      for (int t = 0; t < n; ++t) p[t] = rs.gaussian();
      pts.points.push_back(std::move(p));
    }
    double r2 = geometry::chebyshev_ball(pts).radius_sq;
    // adding a point never shrinks the ball
    PointSet bigger = pts;
    Vec extra(n);
    for (int t = 0; t < n; ++t) extra[t] = rs.gaussian();
    bigger.points.push_back(extra);
    double r2b = geometry::chebyshev_ball(bigger).radius_sq;
    worst = std::max(worst, r2 - r2b - 1e-12);
    // rad^2 >= (max pairwise)^2 / 4, equality for pairs
    double maxpair = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        maxpair = std::max(maxpair, geometry::dist_sq(pts.points[i], pts.points[j]));
    worst = std::max(worst, maxpair / 4.0 - r2 - 1e-9);
    PointSet pair;
    pair.dim = n;
    pair.points = {pts.points[0], pts.points[1]};
    double r2p = geometry::chebyshev_ball(pair).radius_sq;
    worst = std::max(worst,
                     std::fabs(r2p - geometry::dist_sq(pts.points[0], pts.points[1]) / 4.0) - 1e-12);
  }
  return make("geometry/ball-properties", worst <= 0.0, std::max(worst, 0.0),
              "monotone under insertion; pairwise lower bound");
}

CheckResult check_voronoi_knn(const Options& opt) {
  RandomStream rs({opt.seed, 103});
  int bad = 0;
  for (int inst = 0; inst < 300; ++inst) {
    int m = 4 + static_cast<int>(rs.uniform() * 5);
    int n = 1 + static_cast<int>(rs.uniform() * 4);
    PointSet code;
    code.dim = n;
    for (int i = 0; i < m; ++i) {
      Vec p(n);
      for (int t = 0; t < n; ++t) p[t] = rs.gaussian();
      code.points.push_back(std::move(p));
    }
    Vec y(n);
    for (int t = 0; t < n; ++t) y[t] = rs.gaussian();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return geometry::dist_sq(y, code.points[a]) < geometry::dist_sq(y, code.points[b]);
    });
    for (int k = 1; k < m; ++k) {
      std::vector<int> nearest(order.begin(), order.begin() + k);
      if (!geometry::order_voronoi_member(y, code, nearest)) ++bad;
      // swapping one member for a non-member breaks membership
      std::vector<int> wrong = nearest;
      wrong[0] = order[k];
      if (geometry::order_voronoi_member(y, code, wrong)) ++bad;
    }
  }
  return make("geometry/voronoi-knn", bad == 0, bad,
              "membership iff subset equals the k nearest points");
}

CheckResult check_cone_in_voronoi(const Options& opt) {
  RandomStream rs({opt.seed, 104});
  const int lists = 100;
  const int samples = 10000;
  long long violations = 0;
  for (int li = 0; li < lists; ++li) {
    int L = 3 + static_cast<int>(rs.uniform() * 3);
    int dim = L - 1;
    PointSet list;
    double min_pair = 0.0, rad = 0.0;
    geometry::EnclosingBall ball;
    for (;;) {  // resample until the geometry is comfortably non-degenerate
      list.points.clear();
      list.dim = dim;
      for (int i = 0; i < L; ++i) {
        Vec p(dim);
        for (int t = 0; t < dim; ++t) p[t] = 2.0 * rs.gaussian();
        list.points.push_back(std::move(p));
      }
      min_pair = std::numeric_limits<double>::infinity();
      for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j)
          min_pair = std::min(min_pair, std::sqrt(geometry::dist_sq(list.points[i], list.points[j])));
      ball = geometry::chebyshev_ball(list);
      rad = std::sqrt(ball.radius_sq);
      if (min_pair > 0.5 && (min_pair / 2.0) / rad < 0.999) break;
    }
    const int x0 = ball.support[0];
    Vec axis(dim);
    for (int t = 0; t < dim; ++t) axis[t] = ball.center[t] - list.points[x0][t];
    double an = geometry::norm(axis);
    for (int t = 0; t < dim; ++t) axis[t] /= an;
    const double half_angle = std::asin((min_pair / 2.0) / rad);
    std::vector<int> subset;
    for (int i = 0; i < L; ++i)
      if (i != x0) subset.push_back(i);

    for (int s = 0; s < samples; ++s) {
      double theta = half_angle * rs.uniform();
      double radius = (0.001 + 3.999 * rs.uniform()) * rad;
      // unit vector orthogonal to the axis
      Vec w(dim);
      double wn = 0.0;
      do {
        for (int t = 0; t < dim; ++t) w[t] = rs.gaussian();
        double proj = geometry::dot(w, axis);
        for (int t = 0; t < dim; ++t) w[t] -= proj * axis[t];
        wn = geometry::norm(w);
      } while (wn < 1e-9);
      Vec y(dim);
      for (int t = 0; t < dim; ++t)
        y[t] = ball.center[t] + radius * (std::cos(theta) * axis[t] + std::sin(theta) * w[t] / wn);
      if (!geometry::cone_member(y, ball.center, axis, std::min(half_angle * 1.0000001, M_PI / 2 - 1e-9)))
        ++violations;  // sampler sanity: y must lie in the cone
      if (!geometry::order_voronoi_member(y, list, subset)) ++violations;
    }
  }
  return make("geometry/cone-in-voronoi", violations == 0, double(violations),
              "10^4 cone points x 100 lists, zero membership violations");
}

// ------------------------------------------------------------ montecarlo ---

CheckResult check_two_point_exactness(const Options& opt) {
  const long long trials = 100000;
  double worst = 0.0;
  const double pairs[3][2] = {{2.0, 1.0}, {3.0, 1.0}, {2.0, 0.7}};
  for (auto& pr : pairs) {
    double d = pr[0], sigma = pr[1];
    mc::Codebook code;
    code.dim = 2;
    code.points = {{0.0, 0.0}, {d, 0.0}};
    auto est = mc::estimate_error_prob(code, sigma, 1, trials, {opt.seed, 0}, opt.threads);
    double target = numerics::q_function(d / (2.0 * sigma));
    double dev = std::fabs(est.p_hat - target) / est.std_error;
    worst = std::max(worst, dev);
  }
  return make("montecarlo/two-point-q", worst <= 3.0, worst,
              "deviation in standard errors (limit 3)");
}

CheckResult check_blinovsky_trend(const Options& opt) {
  const long long trials = opt.budget == Budget::full ? 1000000 : 200000;
  // equilateral triangle, circumradius 1, rad^2/(2 sigma^2) = 5
  const double sigma = std::sqrt(0.1);
  double prev_absdev = -1.0, prev_se = 0.0;
  bool band_ok = true, drift_ok = true;
  double worst_band = 0.0;
  std::string note;
  for (int n : {10, 20, 40}) {
    PointSet tri;
    tri.dim = n;
    for (int k = 0; k < 3; ++k) {
      Vec p(n, 0.0);
      double ang = M_PI / 2 + 2.0 * M_PI * k / 3.0;
      p[0] = std::cos(ang);
      p[1] = std::sin(ang);
      tri.points.push_back(std::move(p));
    }
    auto res = mc::estimate_list_identity(tri, sigma, trials, {opt.seed, 0}, opt.threads);
    double se_ratio = res.estimate.std_error / (res.estimate.p_hat * 5.0);
    if (res.ratio < 0.8 || res.ratio > 1.3) {
      band_ok = false;
      worst_band = std::max(worst_band, std::fabs(res.ratio - 1.0));
    }
    double absdev = std::fabs(res.ratio - 1.0);
    if (prev_absdev >= 0 && absdev > prev_absdev + 2.0 * (se_ratio + prev_se)) drift_ok = false;
    prev_absdev = absdev;
    prev_se = se_ratio;
    note += fmt("%.3f ", res.ratio);
  }
  return make("montecarlo/blinovsky-trend", band_ok && drift_ok, worst_band,
              "ratios per n: " + note + (band_ok ? "" : "(band [0.8,1.3] violated)"));
}

CheckResult check_obtuse_vertex_ordering(const Options& opt) {
  // obtuse triangle: the vertex opposite the longest edge errs strictly less
  PointSet tri;
  tri.dim = 10;
  Vec a(10, 0.0), b(10, 0.0), c(10, 0.0);
  b[0] = 3.0;
  c[0] = 1.0;
  c[1] = 0.3;
  tri.points = {c, a, b};  // index 0 is the far vertex
  const double sigma = 0.55;
  auto res = mc::estimate_list_identity(tri, sigma, 400000, {opt.seed, 7}, opt.threads);
  double rate_far = double(res.vertex_errors[0]) / res.vertex_trials[0];
  double rate_a = double(res.vertex_errors[1]) / res.vertex_trials[1];
  double rate_b = double(res.vertex_errors[2]) / res.vertex_trials[2];
  bool pass = rate_far < rate_a && rate_far < rate_b;
  return make("montecarlo/obtuse-vertex-ordering", pass, rate_far,
              fmt("far %.2e", rate_far) + fmt(" vs pair %.2e", std::min(rate_a, rate_b)));
}

CheckResult check_ppp_gof(const Options& opt) {
  const int draws = 10000;
  const double lambda = 10.0;
  mc::PppConfig cfg;
  cfg.intensity = lambda;
  cfg.box = {{0.0, 0.0}, {1.0, 1.0}};
  std::vector<long long> hist(64, 0);
  for (int i = 0; i < draws; ++i) {
    auto ps = mc::sample_ppp(cfg, {opt.seed, 300 + static_cast<std::uint64_t>(i)});
    hist[std::min<std::size_t>(ps.points.size(), hist.size() - 1)]++;
  }
  // merge bins so every expected count is >= 5
  std::vector<double> expected;
  std::vector<double> observed;
  double exp_acc = 0.0, obs_acc = 0.0, tail_p = 1.0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    double pmf = std::exp(-lambda + double(k) * std::log(lambda) - std::lgamma(double(k) + 1.0));
    tail_p -= pmf;
    exp_acc += draws * pmf;
    obs_acc += double(hist[k]);
    if (exp_acc >= 5.0) {
      expected.push_back(exp_acc);
      observed.push_back(obs_acc);
      exp_acc = obs_acc = 0.0;
    }
  }
  exp_acc += draws * std::max(tail_p, 0.0);
  if (exp_acc > 0) {
    expected.push_back(exp_acc);
    observed.push_back(obs_acc);
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    double diff = observed[i] - expected[i];
    stat += diff * diff / expected[i];
  }
  double crit = chi_square_quantile(0.99, static_cast<int>(expected.size()) - 1);
  return make("montecarlo/ppp-gof", stat <= crit, stat,
              fmt("chi2 %.2f", stat) + fmt(" vs crit %.2f", crit));
}

CheckResult check_ppp_independence(const Options& opt) {
  const int draws = 10000;
  mc::PppConfig cfg;
  cfg.intensity = 10.0;
  cfg.box = {{0.0, 0.0}, {1.0, 1.0}};
  double s1 = 0, s2 = 0, s12 = 0, s1sq = 0, s2sq = 0;
  for (int i = 0; i < draws; ++i) {
    auto ps = mc::sample_ppp(cfg, {opt.seed, 400 + static_cast<std::uint64_t>(i)});
    double c1 = 0, c2 = 0;
    for (const auto& p : ps.points) (p[0] <= 0.5 ? c1 : c2) += 1.0;
    s1 += c1;
    s2 += c2;
    s12 += c1 * c2;
    s1sq += c1 * c1;
    s2sq += c2 * c2;
  }
  double m1 = s1 / draws, m2 = s2 / draws;
  double cov = s12 / draws - m1 * m2;
  double v1 = s1sq / draws - m1 * m1, v2 = s2sq / draws - m2 * m2;
  double se = std::sqrt((v1 * v2 + cov * cov) / draws);
  bool pass = std::fabs(cov) <= 4.0 * se;
  return make("montecarlo/ppp-independence", pass, std::fabs(cov) / se,
              "count covariance across disjoint boxes, in stderr units");
}

CheckResult check_matern_intensity(const Options& opt) {
  const int draws = opt.budget == Budget::full ? 4000 : 2000;
  const double lambda = 0.5, r = 0.7, side = 10.0;
  mc::PppConfig cfg;
  cfg.intensity = lambda;
  cfg.box = {{0.0, 0.0}, {side, side}};
  cfg.exclusion_radius = r;
  // measure in the eroded window so every surviving point sees its full
  // r-neighborhood inside the box (no boundary bias)
  const double area = (side - 2 * r) * (side - 2 * r);
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < draws; ++i) {
    auto ps = mc::sample_matern(cfg, {opt.seed, 500 + static_cast<std::uint64_t>(i)});
    double cnt = 0;
    for (const auto& p : ps.points)
      if (p[0] >= r && p[0] <= side - r && p[1] >= r && p[1] <= side - r) cnt += 1.0;
    double intensity = cnt / area;
    sum += intensity;
    sumsq += intensity * intensity;
  }
  double mean = sum / draws;
  double sd = std::sqrt(std::max(0.0, sumsq / draws - mean * mean) / draws);
  double target = lambda * std::exp(-lambda * M_PI * r * r);
  bool pass = std::fabs(mean - target) <= 3.0 * sd;
  return make("montecarlo/matern-intensity", pass, std::fabs(mean - target) / sd,
              fmt("mean %.5f", mean) + fmt(" target %.5f", target));
}

CheckResult check_shell_probability(const Options& opt) {
  const long long trials = opt.budget == Budget::full ? 1000000 : 200000;
  auto est = mc::estimate_shell_probability(400, 1.0, 1.0, trials, {opt.seed, 0}, opt.threads);
  double target = 1.0 / (2.0 * std::sqrt(400.0 * M_PI));
  double dev = std::fabs(est.p_hat - target) / est.std_error;
  return make("montecarlo/shell-probability", dev <= 3.0, dev,
              fmt("p_hat %.5f", est.p_hat) + fmt(" target %.5f", target));
}

CheckResult check_mc_determinism(const Options& opt) {
  mc::Codebook code;
  code.dim = 3;
  code.points = {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}};
  auto a = mc::estimate_error_prob(code, 0.8, 1, 20000, {opt.seed, 0}, 1);
  auto b = mc::estimate_error_prob(code, 0.8, 1, 20000, {opt.seed, 0}, 4);
  auto c = mc::estimate_error_prob(code, 0.8, 1, 20000, {opt.seed + 1, 0}, 1);
  auto cb1 = mc::sample_spherical_code(8, 100, 1.0, {opt.seed, 0});
  auto cb2 = mc::sample_spherical_code(8, 100, 1.0, {opt.seed, 0});
  bool pass = a.errors == b.errors && a.errors != c.errors && cb1.points == cb2.points;
  return make("montecarlo/determinism", pass, pass ? 0.0 : 1.0,
              "thread-count invariance and seed reproducibility");
}

CheckResult check_ml_voronoi_equivalence(const Options& opt) {
  RandomStream rs({opt.seed, 600});
  int bad = 0;
  for (int inst = 0; inst < 200; ++inst) {
    int L = 3 + static_cast<int>(rs.uniform() * 3);
    mc::Codebook code;
    code.dim = L;
    PointSet ps;
    ps.dim = L;
    for (int i = 0; i < L; ++i) {
      Vec p(L);
      for (int t = 0; t < L; ++t) p[t] = rs.gaussian();
      code.points.push_back(p);
      ps.points.push_back(p);
    }
    Vec y(L);
    for (int t = 0; t < L; ++t) y[t] = rs.gaussian();
    auto list = mc::ml_list_decode(code, y, L - 1);
    for (int k = 0; k < L; ++k) {
      bool excluded = std::find(list.begin(), list.end(), k) == list.end();
      std::vector<int> others;
      for (int i = 0; i < L; ++i)
        if (i != k) others.push_back(i);
      if (excluded != geometry::order_voronoi_member(y, ps, others)) ++bad;
    }
  }
  return make("montecarlo/ml-voronoi-equivalence", bad == 0, bad,
              "list exclusion iff order-(L-1) Voronoi membership");
}

CheckResult check_expurgation(const Options& opt) {
  RandomStream rs({opt.seed, 700});
  bool pass = true;
  for (int inst = 0; inst < 200 && pass; ++inst) {
    int M = 3 + static_cast<int>(rs.uniform() * 14);
    mc::Codebook code;
    code.dim = 2;
    std::vector<double> err(M);
    double mean = 0.0;
    for (int i = 0; i < M; ++i) {
      code.points.push_back({double(i), 0.0});
      err[i] = rs.uniform();
      mean += err[i];
    }
    mean /= M;
    auto kept = mc::expurgate_half(code, err);
    if (kept.size() != (M + 1) / 2) pass = false;
    for (const auto& p : kept.points) {
      int idx = static_cast<int>(p[0]);
      if (err[idx] > 2.0 * mean + 1e-12) pass = false;
    }
  }
  // pinned examples
  mc::Codebook four;
  four.dim = 1;
  four.points = {{0}, {1}, {2}, {3}};
  auto sel = mc::expurgate_half(four, {0.9, 0.1, 0.2, 0.8});
  pass = pass && sel.points == std::vector<Vec>{{1}, {2}};
  auto ties = mc::expurgate_half(four, {0.5, 0.5, 0.5, 0.5});
  pass = pass && ties.points == std::vector<Vec>{{0}, {1}};
  return make("montecarlo/expurgation", pass, pass ? 0.0 : 1.0,
              "Markov property, stable tie handling");
}

CheckResult check_tiling() {
  bool pass = true;
  mc::Codebook base;
  base.dim = 1;
  base.points = {{0.0}};
  auto lat = mc::tile_constellation(base, 1.0, 0.0, {{-2.5}, {2.5}});
  pass = pass && lat.points == std::vector<Vec>{{-2}, {-1}, {0}, {1}, {2}};

  // separation of distinct shifts, checked by direct construction
  mc::Codebook b2;
  b2.dim = 2;
  b2.points = {{0.3, -0.2}, {-0.4, 0.1}, {0.05, 0.45}};
  const double a = 1.0, infl = 0.1, spacing = a * (1 + infl);
  double min_cross = std::numeric_limits<double>::infinity();
  for (int z1x = -1; z1x <= 1; ++z1x)
    for (int z1y = -1; z1y <= 1; ++z1y)
      for (int z2x = -1; z2x <= 1; ++z2x)
        for (int z2y = -1; z2y <= 1; ++z2y) {
          if (z1x == z2x && z1y == z2y) continue;
          for (const auto& bi : b2.points)
            for (const auto& bj : b2.points) {
              double dx = bi[0] + spacing * z1x - (bj[0] + spacing * z2x);
              double dy = bi[1] + spacing * z1y - (bj[1] + spacing * z2y);
              min_cross = std::min(min_cross, std::sqrt(dx * dx + dy * dy));
            }
        }
  pass = pass && min_cross >= a * infl - 1e-12;

  // the op reproduces the manual construction on a window covering 3x3 shifts
  {
    auto tiled = mc::tile_constellation(b2, a, infl, {{-1.5 * spacing, -1.5 * spacing},
                                                      {1.5 * spacing, 1.5 * spacing}});
    std::vector<Vec> manual;
    for (int zx = -2; zx <= 2; ++zx)
      for (int zy = -2; zy <= 2; ++zy)
        for (const auto& b : b2.points) {
          Vec p = {b[0] + spacing * zx, b[1] + spacing * zy};
          if (std::fabs(p[0]) <= 1.5 * spacing && std::fabs(p[1]) <= 1.5 * spacing)
            manual.push_back(p);
        }
    auto key = [](const Vec& u, const Vec& v) {
      return u[0] != v[0] ? u[0] < v[0] : u[1] < v[1];
    };
    auto got = tiled.points;
    std::sort(got.begin(), got.end(), key);
    std::sort(manual.begin(), manual.end(), key);
    pass = pass && got == manual;
  }

  // window aligned to 4x4 tiling cells: NLD dilutes by exactly ln(1+inflation)
  {
    const double half = spacing / 2.0;
    auto aligned = mc::tile_constellation(
        b2, a, infl, {{-half, -half}, {4 * spacing - half - 1e-9, 4 * spacing - half - 1e-9}});
    double count = double(aligned.points.size());
    double vol = std::pow(4 * spacing, 2);
    double nld = std::log(count / vol) / 2.0;
    double expect = bounds::rate_of_code(3, 2) - std::log(1 + infl);
    pass = pass && std::fabs(nld - expect) <= 1e-9 && count == 3.0 * 16.0;
  }
  return make("montecarlo/tiling", pass, pass ? 0.0 : 1.0,
              "lattice example, shift separation, density dilution");
}

CheckResult check_spherical_code(const Options& opt) {
  const int n = 8, M = 10000;
  const double P = 2.0;
  auto code = mc::sample_spherical_code(n, M, P, {opt.seed, 0});
  double worst_norm = 0.0, mean0 = 0.0;
  for (const auto& row : code.points) {
    worst_norm = std::max(worst_norm, std::fabs(geometry::norm(row) - std::sqrt(n * P)));
    mean0 += row[0];
  }
  mean0 /= M;
  double se = std::sqrt(n * P / double(n)) / std::sqrt(double(M));  // per-coordinate sd ~ sqrt(P)
  bool pass = worst_norm <= 1e-9 && std::fabs(mean0) <= 4.0 * se;
  return make("montecarlo/spherical-code", pass, std::max(worst_norm, std::fabs(mean0) / se),
              "norm constraint and coordinate symmetry");
}

CheckResult check_chi_square_empirical(const Options& opt) {
  // Tail of chi^2(k) beyond (1+delta)k is ~1e-29 at k=400, delta=1, so the
  // estimator samples the exponentially tilted law (1+delta) chi^2(k) and
  // reweights: Monte Carlo, exact in expectation.
  const int k = 400;
  const double delta = 1.0;
  const long long m = opt.budget == Budget::full ? 100000 : 20000;
  const double lam = delta / (2.0 * (1.0 + delta));
  RandomStream rs({opt.seed, 800});
  double acc = 0.0;
  const double log_mgf = -(k / 2.0) * std::log(1.0 - 2.0 * lam);
  for (long long i = 0; i < m; ++i) {
    double x = 2.0 * (1.0 + delta) * rs.gamma(k / 2.0);
    if (x > (1.0 + delta) * k) acc += std::exp(-lam * x + log_mgf);
  }
  double p_hat = acc / double(m);
  double emp = -std::log(p_hat) / k;
  double formula = -numerics::chi_square_tail_exponent(delta, numerics::TailSide::upper);
  double ratio = emp / formula;
  bool pass = ratio >= 0.8 && ratio <= 1.2;
  return make("montecarlo/chi-square-tail", pass, std::fabs(ratio - 1.0),
              fmt("empirical/formula = %.4f", ratio));
}

CheckResult check_gaussian_norm_density(const Options& opt) {
  if (opt.budget != Budget::full)
    return make("montecarlo/gaussian-norm-density", true, 0.0, "skipped under fast budget");
  // ||g||^2 for an n-dim standard normal is exactly 2 Gamma(n/2, 1); sampling
  // it directly makes the 1.3-sqrt(n) histogram bin reachable at desk scale.
  const int n = 200;
  const long long draws = 1000000000LL;
  const double lo = 1.29 * std::sqrt(double(n)), hi = 1.31 * std::sqrt(double(n));
  const int threads = std::max(1, opt.threads);
  const long long chunk = 1000000;
  const long long chunks = (draws + chunk - 1) / chunk;
  std::vector<long long> partial(threads, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      long long local = 0;
      for (long long c = t; c < chunks; c += threads) {
        RandomStream rs({opt.seed, 900 + static_cast<std::uint64_t>(c)});
        const long long count = std::min(chunk, draws - c * chunk);
        for (long long i = 0; i < count; ++i) {
          double x = 2.0 * rs.gamma(n / 2.0);
          double nrm = std::sqrt(x);
          if (nrm >= lo && nrm <= hi) ++local;
        }
      }
      partial[t] = local;
    });
  }
  for (auto& th : pool) th.join();
  long long hits = std::accumulate(partial.begin(), partial.end(), 0LL);
  if (hits == 0) return make("montecarlo/gaussian-norm-density", false, 1.0, "empty bin");
  double f_emp = double(hits) / (double(draws) * (hi - lo));
  double emp_exponent = -std::log(f_emp) / n;
  double formula = poltyrev::gaussian_norm_density_exponent(1.3);
  double rel = std::fabs(emp_exponent - formula) / formula;
  return make("montecarlo/gaussian-norm-density", rel <= 0.10, rel,
              fmt("empirical %.5f", emp_exponent) + fmt(" formula %.5f", formula));
}

std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt) {
  std::vector<CheckResult> out;
  auto add = [&](CheckResult r) { out.push_back(std::move(r)); };
  const bool all = suite == "all";
  if (all || suite == "bounds") {
    add(check_plotkin_zero());
    add(check_bound_ordering_bounded());
    add(check_bound_ordering_unbounded());
    add(check_large_l_trend());
    add(check_derivation_chain());
    add(check_sigma_crit());
  }
  if (all || suite == "exponents") {
    add(check_gallager_reduction());
    add(check_poltyrev_reduction());
    add(check_rce_oracle(opt));
    add(check_exprg_oracle(opt));
    add(check_exe_unbdd_oracle(opt));
    add(check_regime_continuity());
    add(check_capacity_zeros());
    add(check_stationary_consistency());
    add(check_awgn_l_monotonicity());
    add(check_awgn_curve_shape());
    add(check_dmc_sanity());
  }
  if (all || suite == "geometry") {
    add(check_geometry_oracle(opt));
    add(check_geometry_properties(opt));
    add(check_voronoi_knn(opt));
    add(check_cone_in_voronoi(opt));
  }
  if (all || suite == "montecarlo") {
    add(check_two_point_exactness(opt));
    add(check_blinovsky_trend(opt));
    add(check_obtuse_vertex_ordering(opt));
    add(check_ppp_gof(opt));
    add(check_ppp_independence(opt));
    add(check_matern_intensity(opt));
    add(check_shell_probability(opt));
    add(check_mc_determinism(opt));
    add(check_ml_voronoi_equivalence(opt));
    add(check_expurgation(opt));
    add(check_tiling());
    add(check_spherical_code(opt));
    add(check_chi_square_empirical(opt));
    add(check_gaussian_norm_density(opt));
  }
  if (out.empty()) throw DomainError("run_suite: unknown suite '" + suite + "'");
  return out;
}

}  // namespace multipack::verify
