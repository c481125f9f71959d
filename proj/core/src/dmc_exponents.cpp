// SPDX-License-Identifier: Apache-2.0
#include "multipack/dmc_exponents.hpp"

#include <cmath>

#include "multipack/numerics.hpp"

namespace multipack::dmc {

Dmc::Dmc(std::vector<std::vector<double>> W_, std::vector<double> Px_)
    : W(std::move(W_)), Px(std::move(Px_)) {
  if (W.empty() || W[0].empty()) throw DomainError("Dmc: empty transition matrix");
  if (Px.size() != W.size()) throw DomainError("Dmc: Px size must match input alphabet");
  const std::size_t cols = W[0].size();
  double px_sum = 0.0;
  for (double p : Px) {
    if (p < 0) throw DomainError("Dmc: negative input probability");
    px_sum += p;
  }
  if (std::fabs(px_sum - 1.0) > 1e-12) throw DomainError("Dmc: Px must sum to 1");
  for (const auto& row : W) {
    if (row.size() != cols) throw DomainError("Dmc: ragged transition matrix");
    double s = 0.0;
    for (double w : row) {
      if (w < 0) throw DomainError("Dmc: negative transition probability");
      s += w;
    }
    if (std::fabs(s - 1.0) > 1e-12) throw DomainError("Dmc: rows must sum to 1");
  }
}

Dmc make_bsc(double p) {
  if (!(p >= 0 && p <= 1)) throw DomainError("make_bsc: p must lie in [0,1]");
  return Dmc({{1.0 - p, p}, {p, 1.0 - p}}, {0.5, 0.5});
}

double gallager_e0(const Dmc& d, double rho) {
  if (rho < 0) throw DomainError("gallager_e0: rho must be nonnegative");
  const double inv = 1.0 / (1.0 + rho);
  double outer = 0.0;
  for (int y = 0; y < d.ny(); ++y) {
    double inner = 0.0;
    for (int x = 0; x < d.nx(); ++x) inner += d.Px[x] * std::pow(d.W[x][y], inv);
    outer += std::pow(inner, 1.0 + rho);
  }
  return -std::log(outer);
}

double random_coding_exponent(const Dmc& d, double R, int L) {
  if (R < 0) throw DomainError("random_coding_exponent: R must be nonnegative");
  if (L < 2) throw DomainError("random_coding_exponent: L must be >= 2");
  auto objective = [&](double rho) { return -(L - 1.0) * rho * R + gallager_e0(d, (L - 1.0) * rho); };
  // concave in rho, golden section to a 1e-10 bracket
  double rho_star = numerics::golden_max(objective, 0.0, 1.0, 1e-10);
  double best = std::max(objective(rho_star), std::max(objective(0.0), objective(1.0)));
  return best;
}

double expurgated_ex(const Dmc& d, double rho, int L) {
  if (!(rho >= 1.0)) throw DomainError("expurgated_ex: rho must be >= 1");
  if (L < 2) throw DomainError("expurgated_ex: L must be >= 2");
  double tuples = std::pow(double(d.nx()), double(L));
  if (tuples > 1e6) throw TooLarge("expurgated_ex: |X|^L exceeds 1e6");

  const int nx = d.nx(), ny = d.ny();
  double sum = 0.0;
  std::vector<int> x(L, 0);
  for (;;) {
    double px = 1.0;
    for (int k = 0; k < L; ++k) px *= d.Px[x[k]];
    double inner = 0.0;
    for (int y = 0; y < ny; ++y) {
      double prod = 1.0;
      for (int k = 0; k < L; ++k) prod *= std::pow(d.W[x[k]][y], 1.0 / L);
      inner += prod;
    }
    sum += px * std::pow(inner, 1.0 / rho);
    if (!std::isfinite(sum)) throw NonFinite("expurgated_ex: accumulation became non-finite");
    int k = L - 1;
    while (k >= 0 && ++x[k] == nx) x[k--] = 0;
    if (k < 0) break;
  }
  return -rho * std::log(sum);
}

double expurgated_exponent(const Dmc& d, double R, int L, double rho_max) {
  if (R < 0) throw DomainError("expurgated_exponent: R must be nonnegative");
  if (!(rho_max >= 1.0) || !std::isfinite(rho_max))
    throw DomainError("expurgated_exponent: rho_max must be finite and >= 1");
  auto objective = [&](double rho) { return -(L - 1.0) * rho * R + expurgated_ex(d, rho, L); };
  // coarse scan then golden refinement around the best cell
  const int coarse = 64;
  double best_rho = 1.0, best = objective(1.0);
  for (int i = 1; i <= coarse; ++i) {
    double rho = 1.0 + (rho_max - 1.0) * i / coarse;
    double v = objective(rho);
    if (v > best) {
      best = v;
      best_rho = rho;
    }
  }
  double h = (rho_max - 1.0) / coarse;
  double lo = std::max(1.0, best_rho - h), hi = std::min(rho_max, best_rho + h);
  if (hi > lo) {
    double rho_star = numerics::golden_max(objective, lo, hi, 1e-10);
    best = std::max(best, objective(rho_star));
  }
  return best;
}

double mutual_information(const Dmc& d) {
  std::vector<double> py(d.ny(), 0.0);
  for (int x = 0; x < d.nx(); ++x)
    for (int y = 0; y < d.ny(); ++y) py[y] += d.Px[x] * d.W[x][y];
  double mi = 0.0;
  for (int x = 0; x < d.nx(); ++x)
    for (int y = 0; y < d.ny(); ++y) {
      double j = d.Px[x] * d.W[x][y];
      if (j > 0) mi += j * std::log(d.W[x][y] / py[y]);
    }
  return mi;
}

}  // namespace multipack::dmc
