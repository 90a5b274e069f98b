#pragma once

#include <stdexcept>
#include <string>

namespace gc {

// Input could not be parsed or violates a documented precondition.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A soft size cap was exceeded; callers may retry with an explicit override.
class size_limit_error : public std::runtime_error {
 public:
  explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant that should hold for declared graph classes failed.
// Reaching this usually means the input graph is not in the class the caller
// claimed it to be in.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gc
