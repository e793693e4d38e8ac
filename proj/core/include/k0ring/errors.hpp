#pragma once

#include <stdexcept>
#include <string>

namespace k0 {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable alphabets.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// The divisor does not divide the dividend exactly.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// A non-unit value was substituted for an invertible variable.
class NonUnitSubstitution : public Error {
 public:
  using Error::Error;
};

/// Input expected to be invariant under a<->b is not.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// The configured reduction-step budget ran out.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A quotient ring expected to have finite rank over Q does not.
class InfiniteRank : public Error {
 public:
  using Error::Error;
};

/// Term order does not support the requested elimination.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace k0
