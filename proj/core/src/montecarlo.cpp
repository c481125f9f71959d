// SPDX-License-Identifier: Apache-2.0
#include "multipack/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace multipack::mc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SimEstimate finish_estimate(long long trials, long long errors, SeedSpec seed) {
  SimEstimate est;
  est.trials = trials;
  est.errors = errors;
  est.seed = seed;
  est.p_hat = static_cast<double>(errors) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
  est.log_p_hat = errors > 0 ? std::log(est.p_hat) : kNaN;
  return est;
}

// Runs per_trial(i, stream) for i in [0, trials), chunked across threads.
// The error count is a sum of per-trial indicators, so the result does not
// depend on the chunking.
template <class PerTrial>
long long run_trials(long long trials, int threads, SeedSpec seed, PerTrial per_trial) {
  if (trials < 1) throw DomainError("monte carlo: trials must be >= 1");
  threads = std::max(1, threads);
  if (threads == 1) {
    long long errors = 0;
    for (long long i = 0; i < trials; ++i) {
      numerics::RandomStream rs({seed.master_seed, seed.stream_index + static_cast<std::uint64_t>(i)});
      errors += per_trial(i, rs) ? 1 : 0;
    }
    return errors;
  }
  std::vector<long long> partial(threads, 0);
  std::vector<std::thread> pool;
  const long long chunk = (trials + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const long long lo = t * chunk;
      const long long hi = std::min(trials, lo + chunk);
      long long local = 0;
      for (long long i = lo; i < hi; ++i) {
        numerics::RandomStream rs({seed.master_seed, seed.stream_index + static_cast<std::uint64_t>(i)});
        local += per_trial(i, rs) ? 1 : 0;
      }
      partial[t] = local;
    });
  }
  for (auto& th : pool) th.join();
  long long errors = 0;
  for (long long p : partial) errors += p;
  return errors;
}

}  // namespace

double Box::volume() const {
  if (lo.size() != hi.size() || lo.empty()) throw DomainError("Box: inconsistent bounds");
  double v = 1.0;
  for (std::size_t t = 0; t < lo.size(); ++t) {
    if (!(hi[t] > lo[t])) throw DomainError("Box: needs hi > lo in every dimension");
    v *= hi[t] - lo[t];
  }
  return v;
}

bool Box::contains(const Vec& p) const {
  for (std::size_t t = 0; t < lo.size(); ++t)
    if (p[t] < lo[t] || p[t] > hi[t]) return false;
  return true;
}

Codebook sample_spherical_code(int n, int M, double P, SeedSpec seed) {
  if (n < 1 || M < 1) throw DomainError("sample_spherical_code: need n, M >= 1");
  if (!(P > 0)) throw DomainError("sample_spherical_code: P must be positive");
  Codebook code;
  code.dim = n;
  code.power_constraint = P;
  code.points.reserve(M);
  const double target = std::sqrt(n * P);
  for (int i = 0; i < M; ++i) {
    numerics::RandomStream rs({seed.master_seed, seed.stream_index + static_cast<std::uint64_t>(i)});
    Vec row(n);
    double norm_sq = 0.0;
    do {
      norm_sq = 0.0;
      for (int t = 0; t < n; ++t) {
        row[t] = rs.gaussian();
        norm_sq += row[t] * row[t];
      }
    } while (norm_sq == 0.0);
    const double scale = target / std::sqrt(norm_sq);
    for (int t = 0; t < n; ++t) row[t] *= scale;
    code.points.push_back(std::move(row));
  }
  return code;
}

std::vector<int> ml_list_decode(const Codebook& code, const Vec& y, int list_size) {
  const int M = code.size();
  if (list_size < 1 || list_size >= M)
    throw DomainError("ml_list_decode: need 1 <= list_size < M");
  std::vector<std::pair<double, int>> d(M);
  for (int j = 0; j < M; ++j) d[j] = {geometry::dist_sq(y, code.points[j]), j};
  std::partial_sort(d.begin(), d.begin() + list_size, d.end());
  std::vector<int> out(list_size);
  for (int k = 0; k < list_size; ++k) out[k] = d[k].second;
  return out;
}

namespace {

// Error iff the transmitted codeword k is outside the tie-broken nearest
// list, i.e. at least list_size codewords rank before it.
bool transmitted_excluded(const Codebook& code, const Vec& y, int k, int list_size) {
  const double dk = geometry::dist_sq(y, code.points[k]);
  int closer = 0;
  for (int j = 0; j < code.size(); ++j) {
    if (j == k) continue;
    double dj = geometry::dist_sq(y, code.points[j]);
    if (dj < dk || (dj == dk && j < k)) {
      if (++closer >= list_size) return true;
    }
  }
  return false;
}

}  // namespace

SimEstimate estimate_error_prob(const Codebook& code, double sigma, int list_size,
                                long long trials, SeedSpec seed, int threads) {
  const int M = code.size();
  const int n = code.dim;
  if (!(sigma > 0)) throw DomainError("estimate_error_prob: sigma must be positive");
  if (list_size < 1 || list_size >= M)
    throw DomainError("estimate_error_prob: need 1 <= list_size < M");
  if (code.power_constraint) {
    const double limit = std::sqrt(n * *code.power_constraint) * (1.0 + 1e-9);
    for (const auto& row : code.points)
      if (geometry::norm(row) > limit)
        throw DomainError("estimate_error_prob: codeword violates the power constraint");
  }
  const bool round_robin = trials >= M;

  long long errors = run_trials(trials, threads, seed, [&](long long i, numerics::RandomStream& rs) {
    int k;
    if (round_robin) {
      k = static_cast<int>(i % M);
    } else {
      k = std::min(M - 1, static_cast<int>(rs.uniform() * M));
    }
    Vec y(n);
    for (int t = 0; t < n; ++t) y[t] = code.points[k][t] + sigma * rs.gaussian();
    return transmitted_excluded(code, y, k, list_size);
  });
  return finish_estimate(trials, errors, seed);
}

ListIdentityResult estimate_list_identity(const PointSet& list, double sigma, long long trials,
                                          SeedSpec seed, int threads) {
  const int L = list.size();
  if (L < 2) throw DomainError("estimate_list_identity: need at least 2 points");
  if (!(sigma > 0)) throw DomainError("estimate_list_identity: sigma must be positive");

  Codebook code;
  code.dim = list.dim;
  code.points = list.points;

  // Per-vertex tallies: vertex for trial i is i % L (round-robin), so the
  // per-vertex counts are derived deterministically from the error indices.
  threads = std::max(1, threads);
  std::vector<long long> vertex_errors(L, 0);
  std::vector<std::vector<long long>> partial(threads, std::vector<long long>(L, 0));
  std::vector<std::thread> pool;
  const long long chunk = (trials + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const long long lo = t * chunk;
      const long long hi = std::min(trials, lo + chunk);
      Vec y(code.dim);
      for (long long i = lo; i < hi; ++i) {
        numerics::RandomStream rs({seed.master_seed, seed.stream_index + static_cast<std::uint64_t>(i)});
        const int k = static_cast<int>(i % L);
        for (int c = 0; c < code.dim; ++c) y[c] = code.points[k][c] + sigma * rs.gaussian();
        if (transmitted_excluded(code, y, k, L - 1)) partial[t][k] += 1;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < threads; ++t)
    for (int k = 0; k < L; ++k) vertex_errors[k] += partial[t][k];

  long long errors = std::accumulate(vertex_errors.begin(), vertex_errors.end(), 0LL);
  if (errors < 50)
    throw InsufficientErrors("estimate_list_identity: fewer than 50 error events");

  ListIdentityResult out;
  out.estimate = finish_estimate(trials, errors, seed);
  out.vertex_errors = std::move(vertex_errors);
  out.vertex_trials.assign(L, 0);
  for (int k = 0; k < L; ++k) out.vertex_trials[k] = trials / L + (k < trials % L ? 1 : 0);
  const double rad_sq = geometry::chebyshev_ball(list).radius_sq;
  out.ratio = -out.estimate.log_p_hat / (rad_sq / (2.0 * sigma * sigma));
  return out;
}

Codebook expurgate_half(const Codebook& code, const std::vector<double>& per_word_error) {
  const int M = code.size();
  if (static_cast<int>(per_word_error.size()) != M)
    throw DomainError("expurgate_half: error vector size must match codebook");
  const int keep = (M + 1) / 2;
  std::vector<int> order(M);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return per_word_error[a] < per_word_error[b];
  });
  std::vector<int> kept(order.begin(), order.begin() + keep);
  std::sort(kept.begin(), kept.end());  // stable original order
  Codebook out;
  out.dim = code.dim;
  out.power_constraint = code.power_constraint;
  out.points.reserve(keep);
  for (int idx : kept) out.points.push_back(code.points[idx]);
  return out;
}

PointSet sample_ppp(const PppConfig& cfg, SeedSpec seed) {
  if (!(cfg.intensity > 0)) throw DomainError("sample_ppp: intensity must be positive");
  const double vol = cfg.box.volume();
  numerics::RandomStream rs(seed);
  const long long count = rs.poisson(cfg.intensity * vol);
  PointSet out;
  out.dim = cfg.box.dim();
  out.points.reserve(count);
  for (long long i = 0; i < count; ++i) {
    Vec p(out.dim);
    for (int t = 0; t < out.dim; ++t) p[t] = rs.uniform(cfg.box.lo[t], cfg.box.hi[t]);
    out.points.push_back(std::move(p));
  }
  return out;
}

PointSet sample_matern(const PppConfig& cfg, SeedSpec seed) {
  if (!cfg.exclusion_radius || !(*cfg.exclusion_radius > 0))
    throw DomainError("sample_matern: exclusion_radius must be set and positive");
  PointSet ppp = sample_ppp(cfg, seed);
  const double r2 = *cfg.exclusion_radius * *cfg.exclusion_radius;
  const int m = ppp.size();
  std::vector<char> kill(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (geometry::dist_sq(ppp.points[i], ppp.points[j]) <= r2) kill[i] = kill[j] = 1;
  PointSet out;
  out.dim = ppp.dim;
  for (int i = 0; i < m; ++i)
    if (!kill[i]) out.points.push_back(std::move(ppp.points[i]));
  return out;
}

PointSet tile_constellation(const Codebook& base, double a, double inflation, const Box& window) {
  if (!(a > 0) || inflation < 0)
    throw DomainError("tile_constellation: need a > 0, inflation >= 0");
  const int n = base.dim;
  if (window.dim() != n) throw DomainError("tile_constellation: window dimension mismatch");
  for (const auto& p : base.points)
    for (double c : p)
      if (std::fabs(c) > a / 2.0 + 1e-12)
        throw DomainError("tile_constellation: base points must lie in [-a/2, a/2]^n");

  const double spacing = a * (1.0 + inflation);
  std::vector<long long> zlo(n), zhi(n);
  double shift_count = 1.0;
  for (int t = 0; t < n; ++t) {
    zlo[t] = static_cast<long long>(std::ceil((window.lo[t] - a / 2.0) / spacing));
    zhi[t] = static_cast<long long>(std::floor((window.hi[t] + a / 2.0) / spacing));
    if (zhi[t] < zlo[t]) return PointSet{};
    shift_count *= static_cast<double>(zhi[t] - zlo[t] + 1);
  }
  if (shift_count * base.size() > 1e7)
    throw WindowTooLarge("tile_constellation: output would exceed 1e7 points");

  PointSet out;
  out.dim = n;
  std::vector<long long> z(zlo);
  for (;;) {
    for (const auto& b : base.points) {
      Vec p(n);
      bool inside = true;
      for (int t = 0; t < n; ++t) {
        p[t] = b[t] + spacing * static_cast<double>(z[t]);
        if (p[t] < window.lo[t] || p[t] > window.hi[t]) {
          inside = false;
          break;
        }
      }
      if (inside) out.points.push_back(std::move(p));
    }
    int t = n - 1;
    while (t >= 0 && ++z[t] > zhi[t]) {
      z[t] = zlo[t];
      --t;
    }
    if (t < 0) break;
  }
  return out;
}

SimEstimate estimate_shell_probability(int n, double P, double delta, long long trials,
                                       SeedSpec seed, int threads) {
  if (n < 1 || !(P > 0) || !(delta > 0))
    throw DomainError("estimate_shell_probability: need n >= 1, P > 0, delta > 0");
  long long hits = run_trials(trials, threads, seed, [&](long long, numerics::RandomStream& rs) {
    double sum = 0.0;
    for (int t = 0; t < n; ++t) {
      double g = rs.gaussian();
      sum += g * g;
    }
    const double dev = P * sum - n * P;
    return dev >= -delta && dev <= 0.0;
  });
  return finish_estimate(trials, hits, seed);
}

}  // namespace multipack::mc
