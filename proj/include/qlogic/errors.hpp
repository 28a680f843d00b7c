#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong table dimensions, out-of-range indices, unreadable files.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its contract (mixed structures, empty folds, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A request that would exceed a practical size limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling ran out of attempts.
class SamplingError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qlogic
