#pragma once

#include <stdexcept>
#include <string>

namespace roughset {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always an implementation bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace roughset
