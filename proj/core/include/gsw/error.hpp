#pragma once

#include <stdexcept>

namespace gsw {

/// Malformed arguments or input data.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical hypothesis required by an operation does not hold
/// for the given data (e.g. a map that is not a derivation).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A check that must succeed whenever the hypotheses hold has failed.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gsw
