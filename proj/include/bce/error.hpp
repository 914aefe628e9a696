#pragma once

#include <stdexcept>
#include <string>

namespace bce {

/// Base class for every error raised by the algebra engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient rings (or different primes).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An integer that must be inverted is zero in the coefficient ring.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A precondition on the input value failed (level, support, range...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace bce
