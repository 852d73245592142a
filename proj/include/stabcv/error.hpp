#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace stabcv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: ragged matrices, bad JSON shapes, out-of-bounds parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class VariableCountMismatch : public Error {
 public:
  VariableCountMismatch(std::size_t lhs, std::size_t rhs)
      : Error("variable count mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SelfLoopInInput : public Error {
 public:
  explicit SelfLoopInInput(std::size_t vertex)
      : Error("self-loop at vertex " + std::to_string(vertex)) {}
};

class FrozenVertexMutation : public Error {
 public:
  explicit FrozenVertexMutation(std::size_t vertex)
      : Error("vertex " + std::to_string(vertex) + " is frozen") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidQuiver : public Error {
 public:
  using Error::Error;
};

/// Raised when an integer matrix has determinant other than +1 or -1.
class NotUnimodular : public Error {
 public:
  explicit NotUnimodular(mpz_class det)
      : Error("matrix is not unimodular (det = " + det.get_str() + ")"),
        det_(std::move(det)) {}
  const mpz_class& determinant() const noexcept { return det_; }

 private:
  mpz_class det_;
};

/// A run violated a property every F-polynomial must have.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class InsufficientTrace : public Error {
 public:
  using Error::Error;
};

class InvalidSize : public Error {
 public:
  using Error::Error;
};

class ShapeTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace stabcv
