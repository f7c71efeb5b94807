#pragma once

#include <stdexcept>
#include <string>

namespace repsim {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent input: dimension mismatches, non-finite entries,
/// malformed files, degenerate matrices.
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

/// A matrix that must be positive semidefinite has an eigenvalue below the
/// clipping tolerance.
class NotPSD : public Error {
 public:
  explicit NotPSD(const std::string& msg) : Error(msg) {}
};

/// An eigensolver or SVD failed to converge, or an internal sanity bound
/// that holds for valid inputs was violated.
class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace repsim
