#pragma once

#include <stdexcept>
#include <string>

namespace chpos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different spaces, or have incompatible codimensions.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A constructor or operation precondition on a numeric parameter failed.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The construction is well-formed but outside the modeled catalog.
class UnsupportedConstruction : public Error {
 public:
  using Error::Error;
};

/// Declared cone generators do not span the dual space, so interior
/// membership cannot be decided.
class IndeterminateVerdict : public Error {
 public:
  using Error::Error;
};

/// A self-check failed (confluence, level monotonicity, ...).
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  explicit ParseError(const std::string& message) : Error(message) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

}  // namespace chpos
