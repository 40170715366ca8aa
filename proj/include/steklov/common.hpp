#pragma once

#include <stdexcept>

namespace steklov {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr const char* version = "1.0.0";

enum class Direction { minimize, maximize };

// Rejected user input: bad sizes, out-of-range parameters, malformed configs.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical failure inside a solver: factorization breakdown, bracket
// exhaustion, too few recoverable eigenvalues.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace steklov
