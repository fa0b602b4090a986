#pragma once

#include <stdexcept>
#include <string>

namespace imcsim {

// Raised when a cost-model argument is outside the domain of its formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or invalid configuration / workload input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed input that cannot be evaluated (infeasible mapping, etc.).
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace imcsim
