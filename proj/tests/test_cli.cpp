// SPDX-License-Identifier: Apache-2.0
// Exercises the installed command-line surface through a shell.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#ifndef MULTIPACK_CLI_PATH
#define MULTIPACK_CLI_PATH ""
#endif

namespace {

const std::string kCli = MULTIPACK_CLI_PATH;

int run(const std::string& args) {
  std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::vector<std::string> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("simulate list --points nowhere.csv") == 2);  // missing --sigma
  CHECK(run("bounds") == 2);                               // missing --L
  CHECK(run("no-such-command") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("bounds CSV: header, monotone abscissa, Plotkin zero, round-trip") {
  REQUIRE(run("bounds --L 5 --steps 80 --nsr-min 0.01 --nsr-max 0.8 --out cli_bounds.csv") == 0);
  auto rows = parse_csv(slurp("cli_bounds.csv"));
  REQUIRE(rows.size() == 81);
  CHECK(rows[0] == std::vector<std::string>{"nsr", "lb", "ub", "cap_ld"});
  double prev = -1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double x = std::stod(rows[i][0]);
    CHECK(x > prev);
    prev = x;
    for (const auto& cell : rows[i]) {
      if (cell.empty()) continue;
      // 12-significant-digit format re-parses to within 5e-12 relative
      double v = std::stod(cell);
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", v);
      CHECK(cell == buf);
    }
  }
  // final row is the Plotkin point: lb there is zero to formatting precision
  CHECK(std::fabs(std::stod(rows.back()[1])) <= 1e-12);
}

TEST_CASE("exponent CSVs carry the regime columns") {
  REQUIRE(run("exponents --snr 1 --L 3 --steps 60 --out cli_exp.csv") == 0);
  auto rows = parse_csv(slurp("cli_exp.csv"));
  CHECK(rows[0] == std::vector<std::string>{"R", "E_lower", "regime", "R_crit", "R_x"});
  bool saw_ex = false, saw_sl = false, saw_rc = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    saw_ex = saw_ex || rows[i][2] == "expurgated";
    saw_sl = saw_sl || rows[i][2] == "straight_line";
    saw_rc = saw_rc || rows[i][2] == "random_coding";
  }
  CHECK(saw_ex);
  CHECK(saw_sl);
  CHECK(saw_rc);

  REQUIRE(run("exponents-unbounded --L 2 --alpha-min 1 --alpha-max 4 --steps 40 "
              "--out cli_expu.csv") == 0);
  auto urows = parse_csv(slurp("cli_expu.csv"));
  CHECK(urows[0][0] == "alpha");
  CHECK(urows.size() == 41);
}

TEST_CASE("bits flag rescales rates by ln 2") {
  REQUIRE(run("bounds --L 3 --steps 10 --nsr-min 0.1 --nsr-max 0.5 --out cli_nats.csv") == 0);
  REQUIRE(run("bounds --L 3 --steps 10 --nsr-min 0.1 --nsr-max 0.5 --bits --out cli_bits.csv") == 0);
  auto nats = parse_csv(slurp("cli_nats.csv"));
  auto bits = parse_csv(slurp("cli_bits.csv"));
  double a = std::stod(nats[1][1]);
  double b = std::stod(bits[1][1]);
  CHECK(std::fabs(a / b - 0.6931471805599453) <= 1e-9);
}

TEST_CASE("dmc command reads a channel matrix") {
  {
    std::ofstream w("cli_bsc.csv");
    w << "0.9,0.1\n0.1,0.9\n";
  }
  REQUIRE(run("dmc --channel cli_bsc.csv --L 2 --steps 12 --out cli_dmc.csv") == 0);
  auto rows = parse_csv(slurp("cli_dmc.csv"));
  CHECK(rows[0] == std::vector<std::string>{"R", "E_r", "E_ex"});
  // exponent vanishes at mutual information (last grid point)
  CHECK(std::fabs(std::stod(rows.back()[1])) <= 1e-6);
  CHECK(std::stod(rows[1][2]) >= std::stod(rows[1][1]) - 1e-9);  // low-rate dominance
}

TEST_CASE("simulate list emits the ratio and echoes parameters") {
  {
    std::ofstream w("cli_two.csv");
    w << "0,0\n6,0\n";
  }
  REQUIRE(run("simulate list --points cli_two.csv --sigma 1 --trials 300000 --threads 4 "
              "--seed 5 --out cli_list.json") == 0);
  auto text = slurp("cli_list.json");
  CHECK(text.find("\"ratio\"") != std::string::npos);
  CHECK(text.find("\"rad_sq\": 9.0") != std::string::npos);
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical JSON independent of threads") {
  REQUIRE(run("simulate shell --n 50 --trials 30000 --seed 99 --threads 1 --out cli_s1.json") == 0);
  REQUIRE(run("simulate shell --n 50 --trials 30000 --seed 99 --threads 6 --out cli_s6.json") == 0);
  CHECK(slurp("cli_s1.json") == slurp("cli_s6.json"));
  REQUIRE(run("simulate shell --n 50 --trials 30000 --seed 100 --threads 1 --out cli_s2.json") == 0);
  CHECK(slurp("cli_s1.json") != slurp("cli_s2.json"));
}

TEST_CASE("simulate ppp reports counts and can dump points") {
  REQUIRE(run("simulate ppp --intensity 10 --dim 2 --box-min 0 --box-max 1 --seed 3 "
              "--out cli_ppp.json --points-out cli_ppp.csv") == 0);
  auto text = slurp("cli_ppp.json");
  CHECK(text.find("\"count\"") != std::string::npos);
  auto pts = parse_csv(slurp("cli_ppp.csv"));
  CHECK(pts[0] == std::vector<std::string>{"x0", "x1"});
}

TEST_CASE("verify exits 0 on the closed-form suites") {
  CHECK(run("verify --suite bounds") == 0);
  CHECK(run("verify --suite geometry") == 0);
}
