#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbco {

/// Exact integer used for every length and Hilbert coefficient.
using Integer = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input (CLI exit code 1).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A well-formed request whose computation could not be completed
/// (CLI exit code 2).
class ComputationError : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public InputError {
 public:
  AmbientMismatch(std::size_t lhs, std::size_t rhs)
      : InputError("ambient mismatch: " + std::to_string(lhs) + " vs " +
                   std::to_string(rhs) + " variables") {}
};

class UnsupportedOperation : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t column)
      : InputError(what + " at column " + std::to_string(column)),
        column_(column) {}

  /// 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class InfiniteLength : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NoStabilization : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class DegreeMismatch : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class UncertifiedCount : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace hilbco
