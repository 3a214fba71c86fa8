#pragma once

#include <stdexcept>
#include <string>

namespace parityknot {

// Base for every error raised by the library. Parse failures derive from
// ParseError so callers (the CLI) can map them to a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class LabelCountError : public ParseError {
 public:
  using ParseError::ParseError;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class OUMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

class SignMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownChord : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class NotLong : public Error {
 public:
  using Error::Error;
};

class BitNotZero : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

// Raised when two computations that must agree do not. Always indicates a
// bug in the library, never bad input.
class CanonicalMismatch : public Error {
 public:
  using Error::Error;
};

class StaleMove : public Error {
 public:
  using Error::Error;
};

}  // namespace parityknot
