#pragma once

#include <stdexcept>
#include <string>

namespace qhilb {

/// An argument violates an operation's precondition (non-realizable H, bad
/// parameter range, malformed input). The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Seeing one of these means a bug, not bad input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace qhilb
