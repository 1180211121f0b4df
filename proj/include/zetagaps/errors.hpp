#pragma once

#include <stdexcept>
#include <string>

namespace zetagaps {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

/// Rational function evaluated at one of its poles.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Request is well-formed but outside what is tabulated or implemented.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Asymptotic formula used outside the range where it is valid.
class OutOfRegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace zetagaps
