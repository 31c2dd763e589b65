#pragma once

#include <stdexcept>
#include <string>

namespace gmpot {

/// Parameters outside the physical or dimensionless domain.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Level index beyond the bound spectrum.
class IndexError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An (l, m, g) triple that does not label a bound state.
class LabelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Satellite step that leaves the physical parameter domain.
class StepError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Partner construction at a singular parameter point (kb = l).
class SingularityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Log-space quantity not representable in double precision.
class OverflowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Iterative scheme exhausted its budget before reaching the tolerance.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Node-count bracketing found no eigenvalue in the allowed energy window.
class NoEigenvalueError : public ConvergenceError {
public:
  using ConvergenceError::ConvergenceError;
};

} // namespace gmpot
