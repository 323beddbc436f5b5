#pragma once

#include <stdexcept>
#include <string>

namespace bnsum {

// Parameter outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation requested at a pole (gamma, digamma, zeta at s = 1).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Lerch / amplitude function evaluated at phi = pi/2 with alpha <= 1.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numeric routine could not reach the requested tolerance within its caps.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bnsum
