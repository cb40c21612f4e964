#pragma once

#include <stdexcept>
#include <string>

namespace ta {

// Malformed or unsupported user input (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation that could not be completed (CLI exit code 3).
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Retryable: a series was not expanded far enough to decide a comparison.
struct InsufficientPrecision : ComputeError {
  InsufficientPrecision() : ComputeError("insufficient precision") {}
};

}  // namespace ta
