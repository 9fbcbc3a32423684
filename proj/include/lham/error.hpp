#pragma once

#include <stdexcept>
#include <string>

namespace lham {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad vertex id, non-regular base, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a hard size cap of an exhaustive routine.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A randomised generator gave up after its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// The base graph fails the h(E) >= 1 gate required before repair.
class ExpansionError : public InputError {
 public:
  using InputError::InputError;
};

/// An internal invariant did not hold. Always a bug or a violated precondition
/// that slipped past validation.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lham
