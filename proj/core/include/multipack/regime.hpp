// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace multipack {

/// Which branch of the piecewise achievable exponent applies.
enum class Regime { random_coding, straight_line, expurgated };

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::random_coding: return "random_coding";
    case Regime::straight_line: return "straight_line";
    case Regime::expurgated: return "expurgated";
  }
  return "?";
}

}  // namespace multipack
