#pragma once

#include <stdexcept>
#include <string>

namespace dualhelm {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or invariant of an input was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal numerical procedure failed to reach its accuracy target.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dualhelm
