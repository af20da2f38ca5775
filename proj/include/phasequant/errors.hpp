#pragma once

#include <stdexcept>
#include <string>

namespace phasequant {

// Invalid argument or out-of-domain input. CLI maps this to exit code 2.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A series, continued fraction, quadrature, or root search failed to converge
// within its iteration budget. CLI maps this to exit code 3.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested truncation dimension is too small for the demanded tail accuracy.
// Carries the dimension that would have sufficed.
struct truncation_error : std::runtime_error {
  int required_dim;
  truncation_error(const std::string& msg, int required)
      : std::runtime_error(msg), required_dim(required) {}
};

// Two objects that must share parameters (e.g. the representation label k) do not.
struct mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An internal cross-check failed; indicates a bug, not a user error.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace phasequant
