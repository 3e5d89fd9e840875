#pragma once

#include <stdexcept>
#include <string>

namespace fqubit {

/// Argument outside the documented domain of a numerical kernel.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated an operation precondition (e.g. resonance assumed but detuned).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature could not reach the requested absolute tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// ODE integration failed (step-size underflow or step budget exhausted).
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration problem; key() names the offending entry.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::invalid_argument(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace fqubit
