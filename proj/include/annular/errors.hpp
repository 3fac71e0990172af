#pragma once

#include <stdexcept>
#include <string>

namespace annular {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two permutations (or a permutation and a label set) live on different ground sets.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed cycle notation, unknown labels, repeated labels.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on arguments failed (odd n, u >= v, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration or computation would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Signals a bug upstream, never bad user input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace annular
