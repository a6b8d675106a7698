#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation hit a pole (gamma at a non-positive integer, division by zero).
class PoleError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure could not reach its requested accuracy.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace rmt
