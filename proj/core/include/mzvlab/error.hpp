#pragma once

#include <stdexcept>
#include <string>

namespace mzvlab {

/// Raised when an operation is called outside its documented domain.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when serialized input (CSV, JSON, cache payload) is malformed.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace mzvlab
