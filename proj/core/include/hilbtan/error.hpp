#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbtan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal text. position() is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Argument outside an operation's domain (empty generator list, bad
/// permutation, family parameter out of range, wrong variable count, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operation requires a zero-dimensional ideal.
class NotZeroDimensional : public Error {
 public:
  NotZeroDimensional()
      : Error("ideal is not zero-dimensional (missing pure power generator)") {}
};

/// A configured size cap (colength, enumeration size) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search ran out of its node budget before finishing.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hilbtan
