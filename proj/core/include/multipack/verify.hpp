// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multipack/geometry.hpp"

namespace multipack::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_dev = 0.0;
  std::string note;
};

enum class Budget { fast, full };

struct Options {
  Budget budget = Budget::fast;
  std::uint64_t seed = 20260810ULL;
  int threads = 1;
  /// Bias added to closed-form values inside the oracle-agreement checks.
  /// Harness sensitivity hook: a nonzero value must make the suite fail.
  double inject_bias = 0.0;
};

// bounds
CheckResult check_plotkin_zero();
CheckResult check_bound_ordering_bounded();
CheckResult check_bound_ordering_unbounded();
CheckResult check_large_l_trend();
CheckResult check_derivation_chain();
CheckResult check_sigma_crit();

// exponents
CheckResult check_gallager_reduction();
CheckResult check_poltyrev_reduction();
CheckResult check_rce_oracle(const Options& opt);
CheckResult check_exprg_oracle(const Options& opt);
CheckResult check_exe_unbdd_oracle(const Options& opt);
CheckResult check_regime_continuity();
CheckResult check_capacity_zeros();
CheckResult check_stationary_consistency();
CheckResult check_awgn_l_monotonicity();
CheckResult check_awgn_curve_shape();
CheckResult check_dmc_sanity();

// geometry
CheckResult check_geometry_oracle(const Options& opt);
CheckResult check_geometry_properties(const Options& opt);
CheckResult check_voronoi_knn(const Options& opt);
CheckResult check_cone_in_voronoi(const Options& opt);

// montecarlo
CheckResult check_two_point_exactness(const Options& opt);
CheckResult check_blinovsky_trend(const Options& opt);
CheckResult check_obtuse_vertex_ordering(const Options& opt);
CheckResult check_ppp_gof(const Options& opt);
CheckResult check_ppp_independence(const Options& opt);
CheckResult check_matern_intensity(const Options& opt);
CheckResult check_shell_probability(const Options& opt);
CheckResult check_mc_determinism(const Options& opt);
CheckResult check_ml_voronoi_equivalence(const Options& opt);
CheckResult check_expurgation(const Options& opt);
CheckResult check_tiling();
CheckResult check_spherical_code(const Options& opt);
CheckResult check_chi_square_empirical(const Options& opt);
CheckResult check_gaussian_norm_density(const Options& opt);

/// Suite names: "bounds", "exponents", "geometry", "montecarlo", "all".
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt);

/// Independent smallest-enclosing-ball oracle: enumerates circumspheres of
/// all affinely independent subsets and returns the smallest containing one.
double miniball_bruteforce_radius_sq(const geometry::PointSet& pts);

/// Chi-square upper quantile via the Wilson-Hilferty cube approximation.
double chi_square_quantile(double p, int df);

}  // namespace multipack::verify
