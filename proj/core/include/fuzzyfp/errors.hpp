#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyfp {

/// Argument outside the mathematical domain of an operation (t <= 0, a t-norm
/// argument outside [0,1], a non-finite coordinate, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated a documented precondition (empty trace, p_max too large, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mapping produced a point outside its declared codomain carrier.
class CodomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Every tuple of a hypothesis sample was skipped.
class EmptySampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration (instance specs, solver settings, config documents).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fuzzyfp
