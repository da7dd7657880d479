#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Gamma function evaluated at a nonpositive integer.
struct PoleError : DomainError {
  explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

// An iterative scheme (series, quadrature refinement) hit its cap
// before reaching the requested tolerance.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A value that should be real (up to roundoff) carried a large
// imaginary residue, or a similar internal consistency check failed.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands with incompatible dimensions.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Index too close to the truncation boundary.
struct IndexError : std::out_of_range {
  explicit IndexError(const std::string& msg) : std::out_of_range(msg) {}
};

}  // namespace wigner
