#pragma once

#include <stdexcept>
#include <string>

namespace polya {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonResidue : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A configured work bound (rho iterations, continued-fraction steps, ...)
/// was hit before the computation finished.
class EffortExceeded : public Error {
 public:
  using Error::Error;
};

/// A prime scan hit its candidate bound. Signals the bound, not nonexistence.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class NormMinusOne : public Error {
 public:
  using Error::Error;
};

/// The prime 2 is totally ramified in a bi-quadratic field; the H^1 = H^1[2]
/// predictor does not apply.
class TotallyRamifiedTwo : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class InvalidSophieGermain : public Error {
 public:
  using Error::Error;
};

/// An independently re-checked certificate did not hold.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace polya
