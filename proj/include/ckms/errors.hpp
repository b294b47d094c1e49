#pragma once

#include <stdexcept>
#include <string>

namespace ckms {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. a value not in (0,1)).
struct DomainError : Error {
  using Error::Error;
};

/// A scalar whose representation violates its invariants.
struct InvalidScalar : Error {
  using Error::Error;
};

struct PreconditionViolation : Error {
  using Error::Error;
};

/// Iterative method failed to converge or to bracket within its caps.
struct NumericalFailure : Error {
  using Error::Error;
};

/// A configured size cap (dimension, enumeration) would be exceeded.
struct ResourceLimit : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

}  // namespace ckms
