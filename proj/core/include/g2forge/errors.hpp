#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace g2forge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NonFiniteValue : public Error {
 public:
  NonFiniteValue() : Error("floating-point operation produced a non-finite value") {}
};

/// Raised by the linear solver when a reduced row has a zero left-hand side
/// but a nonzero right-hand side. `row` is the index in the caller's matrix.
class InconsistentSystem : public Error {
 public:
  explicit InconsistentSystem(std::size_t row)
      : Error("inconsistent linear system at row " + std::to_string(row)), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class GradeError : public Error {
 public:
  using Error::Error;
};

class SupportError : public Error {
 public:
  using Error::Error;
};

/// A form or tensor is not of the required G2 type. `component` names the
/// offending piece, e.g. "Lambda^3_7".
class TypeError : public Error {
 public:
  TypeError(const std::string& what, std::string component)
      : Error(what + " (offending component: " + component + ")"), component_(std::move(component)) {}
  const std::string& component() const noexcept { return component_; }

 private:
  std::string component_;
};

/// Two routes to the same quantity disagreed. Never expected; signals a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// A pairing that must be real came out with a nonzero imaginary part.
class NonRealResult : public Error {
 public:
  using Error::Error;
};

class IrrationalResult : public Error {
 public:
  using Error::Error;
};

/// Input violates a domain invariant, e.g. v1 + v2 + v3 != 0.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace g2forge
