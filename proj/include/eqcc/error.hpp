#pragma once

#include <stdexcept>
#include <string>

namespace eqcc {

// Bad labels, exponents below 2, malformed inputs.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two bodies occupy the same point.
class CollisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameter outside the domain of a parameterization (radicand < 0,
// closure impossible, interval straddling a singularity).
class OutOfDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EmptyInterval : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotEquilateral : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoBifurcationFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A table entry failed prevariety membership.
class TableVerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eqcc
