#pragma once

#include <stdexcept>
#include <string>

namespace yangbax {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between an exact rational and an approximate complex scalar.
class ScalarMismatch : public Error {
 public:
  using Error::Error;
};

/// Inversion of a matrix (or division by a scalar) that is zero.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A parameter set violates a family constraint or hits a vanishing
/// denominator. The message names the violated relation.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// A square (or fourth) root was requested in exact mode for a value that
/// is not a perfect power.
class NoExactRoot : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace yangbax
