#pragma once

#include <stdexcept>
#include <string>

namespace rhlab {

// Caller passed something that violates an operation's precondition
// (non-unit direction, wrong tuple length, zero-degree polynomial, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter outside the legal domain of a model family or equation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// No sign change inside a root-finding bracket.
class BracketingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Off-diagonal beta reached the floor where the 2-Hopf system is singular.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rhlab
