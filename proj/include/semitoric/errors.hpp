#pragma once

#include <stdexcept>
#include <string>

namespace semitoric {

/// Malformed input text (syntax, field types, rational format).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed but unsupported request, e.g. asking for a vertical edge that
/// does not exist or a corner chop whose preconditions fail.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polygon data that does not describe a valid presentation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must always hold was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace semitoric
