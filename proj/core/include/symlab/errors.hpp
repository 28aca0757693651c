#pragma once

#include <stdexcept>
#include <string>

namespace symlab {

// All library failures derive from Error so callers (the CLI in particular)
// can map them to a single exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand lengths disagree (partition vs partition, polynomial vs point).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Family parameters (q, t, theta, k) outside their admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An exact solve hit a singular system or an eigenvalue collision.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Coordinates closer than the configured minimum gap.
class TieError : public Error {
 public:
  using Error::Error;
};

}  // namespace symlab
