// SPDX-License-Identifier: Apache-2.0
//
// multipack CLI: emits the capacity-bound and error-exponent curves as CSV,
// drives the seeded Monte Carlo simulators (JSON output), and runs the
// verification suites.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "io.hpp"
#include "multipack/awgn_exponents.hpp"
#include "multipack/bounds.hpp"
#include "multipack/dmc_exponents.hpp"
#include "multipack/montecarlo.hpp"
#include "multipack/numerics.hpp"
#include "multipack/poltyrev_exponents.hpp"
#include "multipack/verify.hpp"

namespace {

using nlohmann::json;
using namespace multipack;

constexpr double kLn2 = 0.6931471805599453;

struct OutTarget {
  std::string path;  // empty -> stdout

  void write(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DomainError("cannot open output file '" + path + "'");
    os << content;
  }
};

std::string csv_string(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream ss;
  cli::write_csv(ss, header, rows);
  return ss.str();
}

json estimate_json(const std::string& command, const json& params, const mc::SimEstimate& est) {
  json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["params"] = params;
  j["seed"] = {{"master_seed", est.seed.master_seed}, {"stream_index", est.seed.stream_index}};
  j["trials"] = est.trials;
  j["errors"] = est.errors;
  j["p_hat"] = est.p_hat;
  j["stderr"] = est.std_error;
  if (est.errors > 0)
    j["log_p_hat"] = est.log_p_hat;
  else
    j["log_p_hat"] = nullptr;
  j["derived"] = json::object();
  return j;
}

int run_bounds(const std::string& regime, double P, double single_N, int L, double lo, double hi,
               int steps, bool bits, const OutTarget& out) {
  const double conv = bits ? 1.0 / kLn2 : 1.0;
  const bool bounded = regime == "bounded";
  std::vector<double> xs;  // abscissas: N/P when bounded, N otherwise
  if (single_N > 0) {      // --N collapses the sweep to one abscissa
    xs.push_back(bounded ? single_N / P : single_N);
  } else {
    if (lo <= 0) lo = bounded ? 0.01 : 0.005;
    if (hi <= 0) hi = bounded ? double(L - 1) / L : 0.2;
    for (int i = 0; i < steps; ++i) xs.push_back(lo + (hi - lo) * i / (steps - 1));
  }
  std::vector<std::vector<std::string>> rows;
  if (bounded) {
    const double plotkin = double(L - 1) / L;
    for (double nsr : xs) {
      double N = nsr * P;
      std::string lb, ub, cap;
      if (nsr <= plotkin + 1e-15) {
        bounds::PackingParams p(P, N, L);
        lb = cli::num(conv * bounds::lb_capacity_bounded(p));
        ub = cli::num(conv * bounds::ub_capacity_bounded(p));
      }
      if (nsr <= 1.0) cap = cli::num(conv * bounds::cap_ld_bounded(P, N));
      rows.push_back({cli::num(nsr), lb, ub, cap});
    }
    out.write(csv_string({"nsr", "lb", "ub", "cap_ld"}, rows));
  } else {
    for (double N : xs)
      rows.push_back({cli::num(N), cli::num(conv * bounds::lb_capacity_unbounded(N, L)),
                      cli::num(conv * bounds::ub_capacity_unbounded(N, L)),
                      cli::num(conv * bounds::cap_ld_unbounded(N))});
    out.write(csv_string({"N", "lb", "ub", "cap_ld"}, rows));
  }
  return 0;
}

int run_exponents(double snr, int L, int steps, bool bits, const OutTarget& out) {
  const double conv = bits ? 1.0 / kLn2 : 1.0;
  const double C = awgn::capacity(snr);
  const double rc = awgn::r_crit(snr, L);
  const double rx = awgn::r_x(snr, L);
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < steps; ++i) {
    double R = C * i / (steps - 1);
    auto pt = awgn::exponent_lower_bound({snr, R}, L);
    rows.push_back({cli::num(conv * R), cli::num(conv * pt.value), to_string(pt.regime),
                    cli::num(conv * rc), cli::num(conv * rx)});
  }
  out.write(csv_string({"R", "E_lower", "regime", "R_crit", "R_x"}, rows));
  return 0;
}

int run_exponents_unbounded(int L, double amin, double amax, int steps, bool bits,
                            const OutTarget& out) {
  const double conv = bits ? 1.0 / kLn2 : 1.0;
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < steps; ++i) {
    double alpha = amin + (amax - amin) * i / (steps - 1);
    auto pt = poltyrev::exponent_lower_bound_unbdd({alpha, L});
    rows.push_back({cli::num(alpha), cli::num(conv * pt.value), to_string(pt.regime),
                    cli::num(std::sqrt(double(L))), cli::num(std::sqrt(2.0 * L))});
  }
  out.write(csv_string({"alpha", "E_lower", "regime", "sqrt_L", "sqrt_2L"}, rows));
  return 0;
}

int run_dmc(const std::string& channel_path, const std::string& px_path, int L, int steps,
            double rho_max, bool bits, const OutTarget& out) {
  auto W = cli::read_matrix_csv(channel_path);
  std::vector<double> Px;
  if (px_path.empty()) {
    Px.assign(W.size(), 1.0 / double(W.size()));
  } else {
    auto rows = cli::read_matrix_csv(px_path);
    if (rows.size() == 1)
      Px = rows[0];
    else
      for (const auto& r : rows) Px.push_back(r.at(0));
  }
  dmc::Dmc d(W, Px);
  const double mi = dmc::mutual_information(d);
  const double conv = bits ? 1.0 / kLn2 : 1.0;
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < steps; ++i) {
    double R = mi * i / (steps - 1);
    rows.push_back({cli::num(conv * R), cli::num(conv * dmc::random_coding_exponent(d, R, L)),
                    cli::num(conv * dmc::expurgated_exponent(d, R, L, rho_max))});
  }
  out.write(csv_string({"R", "E_r", "E_ex"}, rows));
  return 0;
}

int run_verify(const std::string& suite, const std::string& budget, std::uint64_t seed,
               int threads) {
  verify::Options opt;
  opt.budget = budget == "full" ? verify::Budget::full : verify::Budget::fast;
  opt.seed = seed;
  opt.threads = threads;
  auto results = verify::run_suite(suite, opt);
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("[%s] %-40s max_dev=%.3e  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.max_dev, r.note.c_str());
    all_pass = all_pass && r.pass;
  }
  std::printf("%zu checks, %s\n", results.size(), all_pass ? "all passed" : "FAILURES present");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multipack: multiple-packing capacity bounds, AWGN/DMC list-decoding error "
               "exponents, and seeded Monte Carlo verification"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ------------------------------------------------------------- bounds ---
  {
    auto* cmd = app.add_subcommand("bounds", "Capacity-bound curves as CSV");
    auto regime = std::make_shared<std::string>("bounded");
    auto P = std::make_shared<double>(1.0);
    auto N = std::make_shared<double>(-1.0);
    auto L = std::make_shared<int>(3);
    auto lo = std::make_shared<double>(-1.0), hi = std::make_shared<double>(-1.0);
    auto steps = std::make_shared<int>(200);
    auto bits = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--regime", *regime)->check(CLI::IsMember({"bounded", "unbounded"}));
    cmd->add_option("--P", *P, "signal power (bounded regime)");
    cmd->add_option("--N", *N, "evaluate at a single noise power instead of sweeping");
    cmd->add_option("--L", *L, "list size plus one")->required()->check(CLI::Range(2, 1000000));
    cmd->add_option("--nsr-min", *lo, "abscissa start (N/P, or N when unbounded)");
    cmd->add_option("--nsr-max", *hi, "abscissa end");
    cmd->add_option("--steps", *steps)->check(CLI::Range(2, 10000000));
    cmd->add_flag("--bits", *bits, "emit rates in bits instead of nats");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &action] {
      action = [=] { return run_bounds(*regime, *P, *N, *L, *lo, *hi, *steps, *bits, {*out}); };
    });
  }

  // ---------------------------------------------------------- exponents ---
  {
    auto* cmd = app.add_subcommand("exponents", "Constrained AWGN exponent curve as CSV");
    auto snr = std::make_shared<double>();
    auto L = std::make_shared<int>(2);
    auto steps = std::make_shared<int>(400);
    auto bits = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--snr", *snr, "signal-to-noise ratio P/sigma^2")->required();
    cmd->add_option("--L", *L)->check(CLI::Range(2, 1000));
    cmd->add_option("--steps", *steps)->check(CLI::Range(2, 10000000));
    cmd->add_flag("--bits", *bits);
    cmd->add_option("--out", *out);
    cmd->callback(
        [=, &action] { action = [=] { return run_exponents(*snr, *L, *steps, *bits, {*out}); }; });
  }
  {
    auto* cmd =
        app.add_subcommand("exponents-unbounded", "Unconstrained AWGN exponent curve as CSV");
    auto L = std::make_shared<int>(2);
    auto amin = std::make_shared<double>(1.0), amax = std::make_shared<double>(4.0);
    auto steps = std::make_shared<int>(400);
    auto bits = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--L", *L)->check(CLI::Range(2, 1000));
    cmd->add_option("--alpha-min", *amin)->check(CLI::Range(1.0, 1e9));
    cmd->add_option("--alpha-max", *amax);
    cmd->add_option("--steps", *steps)->check(CLI::Range(2, 10000000));
    cmd->add_flag("--bits", *bits);
    cmd->add_option("--out", *out);
    cmd->callback([=, &action] {
      action = [=] { return run_exponents_unbounded(*L, *amin, *amax, *steps, *bits, {*out}); };
    });
  }

  // ---------------------------------------------------------------- dmc ---
  {
    auto* cmd = app.add_subcommand("dmc", "Discrete memoryless channel exponents as CSV");
    auto channel = std::make_shared<std::string>();
    auto px = std::make_shared<std::string>();
    auto L = std::make_shared<int>(2);
    auto steps = std::make_shared<int>(50);
    auto rho_max = std::make_shared<double>(64.0);
    auto bits = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--channel", *channel, "CSV with the row-stochastic matrix W")->required();
    cmd->add_option("--px", *px, "CSV with the input distribution (default uniform)");
    cmd->add_option("--L", *L)->check(CLI::Range(2, 16));
    cmd->add_option("--steps", *steps)->check(CLI::Range(2, 1000000));
    cmd->add_option("--rho-max", *rho_max);
    cmd->add_flag("--bits", *bits);
    cmd->add_option("--out", *out);
    cmd->callback([=, &action] {
      action = [=] { return run_dmc(*channel, *px, *L, *steps, *rho_max, *bits, {*out}); };
    });
  }

  // ----------------------------------------------------------- simulate ---
  {
    auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo runs (JSON output)");
    sim->require_subcommand(1);
    {
      auto* cmd = sim->add_subcommand("list", "List-identity estimate for a point list");
      auto points = std::make_shared<std::string>();
      auto sigma = std::make_shared<double>();
      auto trials = std::make_shared<long long>(100000);
      auto seed = std::make_shared<std::uint64_t>(12345);
      auto threads = std::make_shared<int>(1);
      auto out = std::make_shared<std::string>();
      cmd->add_option("--points", *points, "CSV, one point per row")->required();
      cmd->add_option("--sigma", *sigma, "noise per coordinate")->required();
      cmd->add_option("--trials", *trials);
      cmd->add_option("--seed", *seed);
      cmd->add_option("--threads", *threads)->check(CLI::Range(1, 1024));
      cmd->add_option("--out", *out);
      cmd->callback([=, &action] {
        action = [=] {
          auto pts = cli::read_point_csv(*points);
          auto res = mc::estimate_list_identity(pts, *sigma, *trials, {*seed, 0}, *threads);
          json j = estimate_json("simulate list",
                                 {{"points", *points},
                                  {"sigma", *sigma},
                                  {"trials", *trials}},
                                 res.estimate);
          j["derived"]["ratio"] = res.ratio;
          j["derived"]["rad_sq"] = geometry::chebyshev_ball(pts).radius_sq;
          OutTarget{*out}.write(j.dump(2) + "\n");
          return 0;
        };
      });
    }
    {
      auto* cmd = sim->add_subcommand("code", "Spherical-code AWGN error probability");
      auto n = std::make_shared<int>(), M = std::make_shared<int>();
      auto P = std::make_shared<double>(1.0);
      auto list_size = std::make_shared<int>(1);
      auto sigma = std::make_shared<double>();
      auto trials = std::make_shared<long long>(100000);
      auto seed = std::make_shared<std::uint64_t>(12345);
      auto threads = std::make_shared<int>(1);
      auto out = std::make_shared<std::string>();
      cmd->add_option("--n", *n, "dimension")->required()->check(CLI::Range(1, 100000));
      cmd->add_option("--M", *M, "codebook size")->required()->check(CLI::Range(2, 10000000));
      cmd->add_option("--P", *P, "power constraint");
      cmd->add_option("--list-size", *list_size);
      cmd->add_option("--sigma", *sigma)->required();
      cmd->add_option("--trials", *trials);
      cmd->add_option("--seed", *seed);
      cmd->add_option("--threads", *threads)->check(CLI::Range(1, 1024));
      cmd->add_option("--out", *out);
      cmd->callback([=, &action] {
        action = [=] {
          // codeword rows draw from a disjoint stream block
          auto code = mc::sample_spherical_code(*n, *M, *P, {*seed, 1ULL << 32});
          auto est = mc::estimate_error_prob(code, *sigma, *list_size, *trials, {*seed, 0},
                                             *threads);
          json j = estimate_json("simulate code",
                                 {{"n", *n},
                                  {"M", *M},
                                  {"P", *P},
                                  {"list_size", *list_size},
                                  {"sigma", *sigma},
                                  {"trials", *trials}},
                                 est);
          OutTarget{*out}.write(j.dump(2) + "\n");
          return 0;
        };
      });
    }
    {
      auto* cmd = sim->add_subcommand("shell", "Gaussian shell probability");
      auto n = std::make_shared<int>(400);
      auto P = std::make_shared<double>(1.0);
      auto delta = std::make_shared<double>(1.0);
      auto trials = std::make_shared<long long>(1000000);
      auto seed = std::make_shared<std::uint64_t>(12345);
      auto threads = std::make_shared<int>(1);
      auto out = std::make_shared<std::string>();
      cmd->add_option("--n", *n)->check(CLI::Range(1, 100000));
      cmd->add_option("--P", *P);
      cmd->add_option("--delta", *delta);
      cmd->add_option("--trials", *trials);
      cmd->add_option("--seed", *seed);
      cmd->add_option("--threads", *threads)->check(CLI::Range(1, 1024));
      cmd->add_option("--out", *out);
      cmd->callback([=, &action] {
        action = [=] {
          auto est = mc::estimate_shell_probability(*n, *P, *delta, *trials, {*seed, 0}, *threads);
          json j = estimate_json("simulate shell",
                                 {{"n", *n},
                                  {"P", *P},
                                  {"delta", *delta},
                                  {"trials", *trials}},
                                 est);
          j["derived"]["clt_value"] = *delta / (2.0 * *P * std::sqrt(M_PI * *n));
          OutTarget{*out}.write(j.dump(2) + "\n");
          return 0;
        };
      });
    }
    {
      auto* cmd = sim->add_subcommand("ppp", "Poisson/Matern point process sample");
      auto intensity = std::make_shared<double>();
      auto dim = std::make_shared<int>(2);
      auto box_min = std::make_shared<double>(0.0), box_max = std::make_shared<double>(1.0);
      auto excl = std::make_shared<double>(0.0);
      auto seed = std::make_shared<std::uint64_t>(12345);
      auto out = std::make_shared<std::string>();
      auto points_out = std::make_shared<std::string>();
      cmd->add_option("--intensity", *intensity)->required();
      cmd->add_option("--dim", *dim)->check(CLI::Range(1, 64));
      cmd->add_option("--box-min", *box_min);
      cmd->add_option("--box-max", *box_max);
      cmd->add_option("--exclusion-radius", *excl, "nonzero selects the Matern thinning");
      cmd->add_option("--seed", *seed);
      cmd->add_option("--out", *out);
      cmd->add_option("--points-out", *points_out, "also write the sampled points as CSV");
      cmd->callback([=, &action] {
        action = [=] {
          mc::PppConfig cfg;
          cfg.intensity = *intensity;
          cfg.box.lo.assign(*dim, *box_min);
          cfg.box.hi.assign(*dim, *box_max);
          if (*excl > 0) cfg.exclusion_radius = *excl;
          auto pts = *excl > 0 ? mc::sample_matern(cfg, {*seed, 0}) : mc::sample_ppp(cfg, {*seed, 0});
          json j;
          j["schema_version"] = 1;
          j["command"] = "simulate ppp";
          j["params"] = {{"intensity", *intensity}, {"dim", *dim},      {"box_min", *box_min},
                         {"box_max", *box_max},     {"exclusion_radius", *excl}};
          j["seed"] = {{"master_seed", *seed}, {"stream_index", 0}};
          j["derived"] = {{"count", pts.points.size()},
                          {"volume", cfg.box.volume()},
                          {"empirical_intensity", double(pts.points.size()) / cfg.box.volume()}};
          OutTarget{*out}.write(j.dump(2) + "\n");
          if (!points_out->empty()) {
            std::vector<std::string> header(*dim);
            for (int t = 0; t < *dim; ++t) header[t] = "x" + std::to_string(t);
            std::vector<std::vector<std::string>> rows;
            for (const auto& p : pts.points) {
              std::vector<std::string> row(*dim);
              for (int t = 0; t < *dim; ++t) row[t] = cli::num(p[t]);
              rows.push_back(std::move(row));
            }
            OutTarget{*points_out}.write(csv_string(header, rows));
          }
          return 0;
        };
      });
    }
  }

  // ------------------------------------------------------------- verify ---
  {
    auto* cmd = app.add_subcommand("verify", "Oracle/continuity/reduction suites");
    auto suite = std::make_shared<std::string>("all");
    auto budget = std::make_shared<std::string>("fast");
    auto seed = std::make_shared<std::uint64_t>(20260810ULL);
    auto threads = std::make_shared<int>(1);
    cmd->add_option("--suite", *suite)
        ->check(CLI::IsMember({"all", "bounds", "exponents", "geometry", "montecarlo"}));
    cmd->add_option("--budget", *budget)->check(CLI::IsMember({"fast", "full"}));
    cmd->add_option("--seed", *seed);
    cmd->add_option("--threads", *threads)->check(CLI::Range(1, 1024));
    cmd->callback([=, &action] { action = [=] { return run_verify(*suite, *budget, *seed, *threads); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
