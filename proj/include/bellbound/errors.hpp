#pragma once

#include <stdexcept>
#include <string>

namespace bellbound {

/// A table failed a structural invariant (normalization, shape, range).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation that presupposes no-signaling was handed a signaling behavior.
struct SignalingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised before starting work whose size exceeds the configured budget.
/// A partial enumeration or LP is not a certificate, so there is no
/// truncated mode.
struct BudgetExceededError : std::runtime_error {
  BudgetExceededError(const std::string& message, std::string required_count)
      : std::runtime_error(message), required(std::move(required_count)) {}
  std::string required;
};

}  // namespace bellbound
