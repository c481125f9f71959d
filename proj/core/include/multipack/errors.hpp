// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace multipack {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Bisection bracket does not straddle a sign change.
struct NoSignChange : std::invalid_argument {
  explicit NoSignChange(const std::string& what) : std::invalid_argument(what) {}
};

/// An objective returned NaN/inf at a probed point.
struct NonFinite : std::runtime_error {
  explicit NonFinite(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration or output-size guard tripped.
struct TooLarge : std::length_error {
  explicit TooLarge(const std::string& what) : std::length_error(what) {}
};

struct WindowTooLarge : std::length_error {
  explicit WindowTooLarge(const std::string& what) : std::length_error(what) {}
};

/// Non-finite coordinates fed to a geometric primitive.
struct DegenerateInput : std::invalid_argument {
  explicit DegenerateInput(const std::string& what) : std::invalid_argument(what) {}
};

/// The sigma threshold of the derivation chain does not exist for these parameters.
struct SigmaUndefined : std::domain_error {
  explicit SigmaUndefined(const std::string& what) : std::domain_error(what) {}
};

/// Too few error events for a reliable Monte Carlo estimate.
struct InsufficientErrors : std::runtime_error {
  explicit InsufficientErrors(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace multipack
