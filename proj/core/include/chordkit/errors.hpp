#pragma once

#include <stdexcept>
#include <string>

namespace chordkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied something outside an operation's contract: a
/// self-loop, a non-permutation ordering, an infeasible family spec.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (graph6, edge lists, orderings, family
/// strings).
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The input is well formed but exceeds a configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace chordkit
