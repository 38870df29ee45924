#pragma once

#include <stdexcept>
#include <string>

namespace halfint {

/// Bad argument or size guard exceeded. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical precondition of an algorithm does not hold for the input
/// (exit code 3 in the CLI).
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace halfint
