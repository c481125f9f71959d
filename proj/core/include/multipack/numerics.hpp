// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "multipack/errors.hpp"

namespace multipack::numerics {

/// Closed bracket [lo, hi] with lo < hi, both finite.
struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
      throw DomainError("Interval requires finite lo < hi");
  }
  double width() const { return hi - lo; }
};

/// Identifies one reproducible random stream.
///
/// The (master_seed, stream_index) -> generator mapping is a pure function;
/// distinct stream indices give statistically independent streams, so trial i
/// of a simulation can always own stream i regardless of worker count.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

namespace detail {
// SplitMix64 finalizer; stateless mixing of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Seedable random stream with hand-rolled variate transforms.
///
/// The engine is std::mt19937_64 (bit-exact across implementations); all
/// transforms are implemented here rather than through std::*_distribution,
/// whose algorithms are implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(SeedSpec spec) {
    std::uint64_t k = detail::mix64(spec.master_seed);
    k = detail::mix64(k ^ (0xD1342543DE82EF95ULL * (spec.stream_index + 1)));
    k = detail::mix64(k ^ spec.stream_index);
    engine_.seed(k);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller (second value cached).
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double theta = 2.0 * M_PI * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  /// Poisson count by Knuth's product method; fine up to mean ~700.
  long long poisson(double mean) {
    if (!(mean > 0)) throw DomainError("poisson mean must be positive");
    if (mean > 700.0) throw TooLarge("poisson mean too large for product method");
    const double limit = std::exp(-mean);
    long long k = 0;
    double prod = uniform();
    while (prod > limit) {
      ++k;
      prod *= uniform();
    }
    return k;
  }

  /// Gamma(shape, 1) for shape >= 1 via Marsaglia-Tsang squeeze.
  double gamma(double shape) {
    if (!(shape >= 1.0)) throw DomainError("gamma sampler requires shape >= 1");
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = gaussian();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      double u = uniform();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
  }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Root of f on the bracket by bisection; bracket width shrinks below tol.
/// Throws NoSignChange when f(lo) and f(hi) have the same (nonzero) sign.
template <class F>
double bisect(F&& f, Interval iv, double tol = 1e-12) {
  double lo = iv.lo, hi = iv.hi;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NoSignChange("bisect: f(lo) and f(hi) have the same sign");
  int iters = 0;
  while (hi - lo > tol && iters < 200) {
    ++iters;
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Golden-section minimum of a unimodal f on [lo, hi] to bracket width tol.
template <class F>
double golden_min(F&& f, double lo, double hi, double tol = 1e-10) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

template <class F>
double golden_max(F&& f, double lo, double hi, double tol = 1e-10) {
  return golden_min([&](double x) { return -f(x); }, lo, hi, tol);
}

struct Min2dResult {
  double x;
  double y;
  double value;
};

/// Coarse grid scan over the box followed by coordinate-descent refinement
/// (golden sections along each axis in a shrinking local bracket).
/// The returned value never exceeds any probed grid value.
/// Throws NonFinite if f is non-finite at any probed point.
Min2dResult minimize_2d(const std::function<double(double, double)>& f, Interval bx,
                        Interval by, int grid = 256, double refine_tol = 1e-10);

/// P[N(0,1) > x].
double q_function(double x);

enum class TailSide { upper, lower };

/// Large-deviation exponent of the chi-square tail:
/// upper: (1/2)(-delta + ln(1+delta)) for delta > 0,
/// lower: (1/2)( delta + ln(1-delta)) for delta in (0,1). Both are <= 0.
double chi_square_tail_exponent(double delta, TailSide side);

}  // namespace multipack::numerics
