#pragma once

#include <stdexcept>
#include <string>

namespace superchar {

/// Malformed or non-dominant input supplied by a caller.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated computation did not reproduce itself under deeper truncation.
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold exactly failed (inexact division, sign mismatch).
/// Always indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace superchar
