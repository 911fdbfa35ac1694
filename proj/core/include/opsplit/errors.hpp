#pragma once

#include <stdexcept>

namespace opsplit {

// A caller broke an interface contract (dimension mismatch, non-finite
// state, invalid oracle output).
struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid scalar or range argument (step sizes, relaxations, boxes).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Residual blow-up detected by a solver loop.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operator claimed positive definite failed a Rayleigh-quotient probe.
struct NotPositiveDefiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conjugate proxes support scaled-identity metrics only.
struct UnsupportedMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required step-size certificate did not pass.
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace opsplit
