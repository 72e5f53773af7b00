// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qnmlab
{

// Raised for geometry or parameter values that violate a precondition.
class InvalidGeometry : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent structure/config description.
class ConfigError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a special function is evaluated outside its domain.
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Iterative solver failed. Carries the last iterate and its residual so the caller can
// report how far off the search ended.
class NoConvergence : public std::runtime_error
{
public:
  NoConvergence(const std::string &what, std::complex<double> last_iterate, double residual)
    : std::runtime_error(what), last_iterate_(last_iterate), residual_(residual)
  {
  }

  std::complex<double> last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }

private:
  std::complex<double> last_iterate_;
  double residual_;
};

// A converged root that is not a physical quasinormal mode (Im ω >= 0 or Re ω <= 0).
class SpuriousRoot : public NoConvergence
{
public:
  using NoConvergence::NoConvergence;
};

// Quantity requested at a point where the mode (nearly) vanishes.
class NearZeroField : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Dense linear system too ill-conditioned to trust.
class SingularSystem : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace qnmlab
