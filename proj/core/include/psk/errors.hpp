#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psk {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must live in the same Sₙ do not.
class DegreeMismatch : public Error {
 public:
  DegreeMismatch(int expected, int actual)
      : Error("degree mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(actual)) {}
};

/// A size guard (enumeration, partition count, tableau count) refused the request.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A covariance matrix has an eigenvalue below the allowed negative tolerance.
class IndefiniteMatrix : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed. `position` is the 0-based character offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace psk
