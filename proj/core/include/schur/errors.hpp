#pragma once

#include <stdexcept>

namespace schur {

// Malformed input data: unparsable numbers, zero leading coefficients,
// empty coefficient lists, out-of-domain parameters.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact and floating values met in one expression, or an operation that
// requires one backend received the other.
struct backend_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The root finder exhausted its iteration budget without reaching the
// residual target. Surfaced to the caller; never retried silently.
struct no_convergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace schur
