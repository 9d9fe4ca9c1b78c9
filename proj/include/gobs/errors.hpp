#pragma once

#include <stdexcept>
#include <string>

namespace gobs {

// Violated precondition of an operation (bad argument, out-of-contract input).
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// The feasible set for the witness point x0 is empty.
struct infeasible_witness : std::runtime_error {
  explicit infeasible_witness(const std::string& what) : std::runtime_error(what) {}
};

// A column-group constant K_s is numerically indistinguishable from zero.
struct degenerate_constant : std::runtime_error {
  long long group;
  explicit degenerate_constant(long long s, const std::string& what)
      : std::runtime_error(what), group(s) {}
};

}  // namespace gobs
