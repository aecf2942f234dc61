#pragma once

#include <stdexcept>
#include <string>

namespace cbqo {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An inverse letter appeared in a word over a monoid-only alphabet.
class AlphabetViolation : public Error {
 public:
  using Error::Error;
};

// Empty word, empty set or similar input for which the operation has no answer.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (e.g. uncertified presentation).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured size or depth bound was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Input that parses but does not have the shape an operation expects.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace cbqo
