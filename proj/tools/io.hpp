// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "multipack/geometry.hpp"

namespace multipack::cli {

/// One double formatted with 12 significant digits (the CSV contract).
std::string num(double v);

/// UTF-8, comma-separated, LF line endings, header row. Cells are preformatted
/// strings; an empty string yields an empty cell (never NaN text).
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Reads one point per row. A leading non-numeric row is treated as a header.
geometry::PointSet read_point_csv(const std::string& path);

/// Reads a numeric matrix (used for channel matrices and input distributions).
std::vector<std::vector<double>> read_matrix_csv(const std::string& path);

}  // namespace multipack::cli
