#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace phase_ambiguity {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The caller handed in data that violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotEquiIntensity : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class EnumerationCapExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A numerical procedure could not produce a result that meets its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class RootFindingError : public NumericalError {
 public:
  RootFindingError(const std::string& what, std::vector<std::size_t> failed)
      : NumericalError(what), failed_roots_(std::move(failed)) {}

  const std::vector<std::size_t>& failed_roots() const noexcept { return failed_roots_; }

 private:
  std::vector<std::size_t> failed_roots_;
};

/// Roots of an intensity polynomial do not split into reciprocal-conjugate pairs.
class PairingFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Two root forms do not agree up to root flips.
class NoMatch : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Internal consistency check failed (e.g. a corrupted spectrum).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace phase_ambiguity
