#pragma once

#include <stdexcept>
#include <string>

namespace sigmalab {

// Base of every error raised by the library. Messages name the offending
// quantity and the violated constraint.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  InvalidParams(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Theorem applied outside its stated hypotheses (e.g. non-integer orders for
// the blow-up result).
class ScopeError : public Error {
 public:
  using Error::Error;
};

class MissingRegularity : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class NonFiniteState : public Error {
 public:
  NonFiniteState(double t, const std::string& what) : Error(what), t_(t) {}
  double time() const noexcept { return t_; }

 private:
  double t_;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class NonPositiveNorm : public Error {
 public:
  using Error::Error;
};

class NoBlowupObserved : public Error {
 public:
  using Error::Error;
};

class ThetaOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace sigmalab
