#pragma once

#include <stdexcept>
#include <string>

namespace padepm {

/// Root of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed coefficients, an impossible conformation, bad flags.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InsufficientCoefficients : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroPole : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A numerical failure: the inputs are well formed but the computation
/// cannot produce a trustworthy answer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonFinite : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RankDeficient : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class AllZero : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularVandermonde : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DuplicatePole : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class Collapse : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonTerminating : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PoleHit : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace padepm
