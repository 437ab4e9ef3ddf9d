#pragma once

#include <stdexcept>
#include <string>

namespace contactkirby {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (zero denominator, length mismatch, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
  using Error::Error;
};

/// A (tb, rot) pair no Legendrian unknot in the standard tight sphere realizes.
class InvalidLegendrian : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnsupportedFraming : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidExpansion : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Contact 0-surgery has no (+-1)-presentation.
class ZeroSurgery : public InvalidInput {
 public:
  ZeroSurgery()
      : InvalidInput("contact 0-surgery has no contact (+-1)-surgery presentation") {}
};

}  // namespace contactkirby
