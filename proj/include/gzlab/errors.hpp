#pragma once

#include <stdexcept>
#include <string>

namespace gzlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Table or argument exceeds a supported size.
struct SizeError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Evaluation requested at (or numerically at) a pole.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// A contour integration could not avoid a zero after the allowed retries.
struct ContourError : Error {
  using Error::Error;
};

// Zero search could not be reconciled with the argument-principle count.
struct IncompleteZeroListError : Error {
  using Error::Error;
};

}  // namespace gzlab
