#pragma once

#include <stdexcept>
#include <string>

namespace lsa {

// Malformed or inconsistent input (bad JSON, wrong dimensions, violated
// preconditions). The CLI maps these to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

// A solver could not finish: size limit, iteration cap, time limit, or an
// internal invariant failure. The CLI maps these to exit code 2.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LimitExceeded : public SolverError {
 public:
  using SolverError::SolverError;
};

class InternalError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace lsa
