#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superform {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad scalar strings, shape mismatches, bad files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Scalar text that does not match the grammar; column is 1-based within
/// the offending token.
class ScalarSyntaxError : public InputError {
 public:
  ScalarSyntaxError(const std::string& what, std::size_t column)
      : InputError(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// A witness or an algebraic identity failed to verify.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Raised in exact mode when a required square root leaves Q(i).  Callers
/// catch it and redo the affected step in approximate arithmetic.
class IrrationalRootError : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the range the classifier covers (total dimension > 7).
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace superform
