#pragma once

#include <stdexcept>
#include <string>

namespace lqk {

/// Raised when an argument violates an operation's precondition
/// (parameter out of range, point outside the convergence region, ...).
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a closed-form kernel is evaluated on (or numerically at) one of
/// its singular sets.
class pole_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes to the same answer disagreed. Always a bug or a
/// numerical breakdown, never a user error.
class inconsistency_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace lqk
