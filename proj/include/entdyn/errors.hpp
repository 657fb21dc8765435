#pragma once

#include <stdexcept>
#include <string>

namespace entdyn {

// Input matrix fails a Hermiticity precondition.
class NotHermitianError : public std::invalid_argument {
 public:
  explicit NotHermitianError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Iterative eigensolver exhausted its sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// State vector deviates from unit norm beyond tolerance.
class NotNormalizedError : public std::invalid_argument {
 public:
  explicit NotNormalizedError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A matrix required to be unitary is not.
class NotUnitaryError : public std::invalid_argument {
 public:
  explicit NotUnitaryError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Two trajectories were sampled on different time grids.
class GridMismatchError : public std::invalid_argument {
 public:
  explicit GridMismatchError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A coupling energy scale that must be nonzero is zero.
class DegenerateScaleError : public std::invalid_argument {
 public:
  explicit DegenerateScaleError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Experiment configuration failed validation; message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested operation is not defined for the given Hamiltonian.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace entdyn
