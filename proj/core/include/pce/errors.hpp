#pragma once

#include <stdexcept>
#include <string>

namespace pce {

// Parameter regime outside the model: maser threshold exceeded, unphysical
// effective temperature, ambiguous stationary state. CLI exit code 3.
struct PhysicsError : std::runtime_error {
  explicit PhysicsError(const std::string& what) : std::runtime_error(what) {}
};

// Solver breakdown: step-size underflow, singular linear system, stalled
// relaxation. CLI exit code 4.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// More photon population at the truncation edge than the tail tolerance allows.
struct UnderTruncatedError : NumericalError {
  explicit UnderTruncatedError(const std::string& what) : NumericalError(what) {}
};

}  // namespace pce
