// SPDX-License-Identifier: Apache-2.0
#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "multipack/errors.hpp"

namespace multipack::cli {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      os << row[i] << (i + 1 < row.size() ? "," : "\n");
}

namespace {

bool parse_row(const std::string& line, std::vector<double>& out) {
  out.clear();
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t pos = 0;
      double v = std::stod(cell, &pos);
      while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
      if (pos != cell.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

std::vector<std::vector<double>> read_rows(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw DomainError("cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    if (!parse_row(line, row)) {
      if (first) {  // header row
        first = false;
        continue;
      }
      throw DomainError("non-numeric row in '" + path + "'");
    }
    first = false;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DomainError("no data rows in '" + path + "'");
  return rows;
}

}  // namespace

geometry::PointSet read_point_csv(const std::string& path) {
  return geometry::PointSet(read_rows(path));
}

std::vector<std::vector<double>> read_matrix_csv(const std::string& path) {
  return read_rows(path);
}

}  // namespace multipack::cli
