// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "multipack/geometry.hpp"
#include "multipack/numerics.hpp"

namespace multipack::mc {

using geometry::PointSet;
using geometry::Vec;
using numerics::SeedSpec;

/// M codewords in R^n, optionally under the norm constraint sqrt(n*P).
struct Codebook {
  std::vector<Vec> points;
  int dim = 0;
  std::optional<double> power_constraint;

  int size() const { return static_cast<int>(points.size()); }
};

/// Outcome of a seeded Monte Carlo run. log_p_hat is NaN when no errors were
/// observed. Reruns with the same seed are bit-identical and independent of
/// the worker count (trial i always owns stream seed.stream_index + i).
struct SimEstimate {
  long long trials = 0;
  long long errors = 0;
  double p_hat = 0.0;
  double std_error = 0.0;
  double log_p_hat = 0.0;
  SeedSpec seed;
};

/// Axis-aligned box in R^n.
struct Box {
  Vec lo;
  Vec hi;

  int dim() const { return static_cast<int>(lo.size()); }
  double volume() const;
  bool contains(const Vec& p) const;
};

struct PppConfig {
  double intensity = 0.0;
  Box box;
  std::optional<double> exclusion_radius;
};

/// M i.i.d. points uniform on the sphere of radius sqrt(n*P); row i is drawn
/// from stream seed.stream_index + i.
Codebook sample_spherical_code(int n, int M, double P, SeedSpec seed);

/// Indices of the list_size nearest codewords to y, ties broken by lowest
/// index, ordered by increasing distance.
std::vector<int> ml_list_decode(const Codebook& code, const Vec& y, int list_size);

/// Average ML list-decoding error probability over an AWGN channel with
/// per-coordinate noise sigma. Codewords are picked round-robin when
/// trials >= M (variance reduction for the average), uniformly otherwise.
SimEstimate estimate_error_prob(const Codebook& code, double sigma, int list_size,
                                long long trials, SeedSpec seed, int threads = 1);

struct ListIdentityResult {
  SimEstimate estimate;
  /// -ln(p_hat) / (rad^2 / (2 sigma^2)) with rad^2 the Chebyshev radius of the list.
  double ratio = 0.0;
  std::vector<long long> vertex_trials;
  std::vector<long long> vertex_errors;
};

/// Treats an L-point list as its own codebook and estimates the average
/// (L-1)-list-decoding error probability, i.e. the chance the transmitted
/// point ends up farthest. Throws InsufficientErrors below 50 error events.
ListIdentityResult estimate_list_identity(const PointSet& list, double sigma, long long trials,
                                          SeedSpec seed, int threads = 1);

/// Keeps the ceil(M/2) rows with the smallest error values, in stable
/// (original) order; by Markov every kept value is at most twice the mean.
Codebook expurgate_half(const Codebook& code, const std::vector<double>& per_word_error);

/// Homogeneous Poisson point process restricted to the box: the count is
/// Poisson(intensity * volume) and points are i.i.d. uniform.
PointSet sample_ppp(const PppConfig& cfg, SeedSpec seed);

/// Matern thinning of the PPP: every pair at distance <= exclusion_radius is
/// removed entirely (both members).
PointSet sample_matern(const PppConfig& cfg, SeedSpec seed);

/// Tiles base + a(1+inflation) Z^n and keeps the points inside the window.
/// Base points must lie in [-a/2, a/2]^n. Distinct shifts are separated by at
/// least a*inflation. Throws WindowTooLarge beyond 1e7 output points.
PointSet tile_constellation(const Codebook& base, double a, double inflation, const Box& window);

/// P[ sum_i x_i^2 - nP in [-delta, 0] ] for x_i i.i.d. N(0, P); the CLT value
/// is delta / (2 P sqrt(pi n)).
SimEstimate estimate_shell_probability(int n, double P, double delta, long long trials,
                                       SeedSpec seed, int threads = 1);

}  // namespace multipack::mc
