#pragma once

#include <stdexcept>
#include <string>

namespace pgreen {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed arguments, violated preconditions, unreadable files.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

// The requested object cannot exist: the domain has empty complement,
// so no positive potential can vanish towards the boundary.
struct ObstructionError : Error {
  explicit ObstructionError(const std::string& what) : Error(what) {}
};

// Iterative solve failed to reach the requested tolerance.
struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

}  // namespace pgreen
