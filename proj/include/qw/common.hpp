#pragma once

#include <stdexcept>
#include <string>

namespace qw {

// Malformed user input: bad tables, failed preconditions, non-cocycles, unreadable files.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation refused because it exceeds the generator-tuple budget.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tuple budget for exhaustive level-n computations. Default 10^6,
// overridable through the QW_MAX_TUPLES environment variable.
long long max_tuple_budget();

}  // namespace qw
