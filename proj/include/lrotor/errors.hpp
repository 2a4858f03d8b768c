// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lrotor {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the algebraic or geometric domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyDomain : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature could not converge; the integral is treated as divergent.
class SingularIntegral : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class NotMonotone : public Error {
 public:
  using Error::Error;
};

/// |EG - F^2| is too small to classify or normalise the surface normal.
class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

/// A point sits on (or numerically at) a change of causal character.
class Degenerate : public Error {
 public:
  using Error::Error;
};

class ComplexEigenvalues : public Error {
 public:
  using Error::Error;
};

class UnsolvableForDerivative : public Error {
 public:
  using Error::Error;
};

class StepFailure : public Error {
 public:
  using Error::Error;
};

/// The initial value of an ODE solve is already outside the validity domain.
class DomainExit : public Error {
 public:
  DomainExit(const std::string& what, double last_valid_r)
      : Error(what), last_valid_r_(last_valid_r) {}
  double last_valid_r() const noexcept { return last_valid_r_; }

 private:
  double last_valid_r_;
};

class Inadmissible : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: JSON documents, relation strings, CLI options.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lrotor
