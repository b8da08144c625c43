#pragma once

#include <stdexcept>
#include <string>

namespace periodrel {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible shape (matrix dimensions, series orders, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Two quadratic scalars from different fields Q(sqrt d) met in one expression.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its own exact self-check.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// An exact computation hit a configured resource cap.
class UndecidedError : public Error {
 public:
  using Error::Error;
};

}  // namespace periodrel
