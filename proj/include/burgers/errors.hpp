#pragma once

#include <stdexcept>
#include <string>

namespace burgers {

/// Invalid input: mesh sizes, parameter ranges, config keys.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A stability quantity was requested for the wrong θ regime.
class RegimeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Base of all failures raised while advancing the scheme.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, int time_index)
      : std::runtime_error(what), time_index_(time_index) {}

  int time_index() const noexcept { return time_index_; }

 private:
  int time_index_;
};

/// Non-finite state or state above the blow-up threshold.
class BlowUp : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Newton iteration budget exhausted.
class NonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Zero pivot in the Thomas sweep.
class SingularTridiagonal : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Not enough usable samples for a fit.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace burgers
