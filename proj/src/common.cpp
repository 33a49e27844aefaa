#include "qw/common.hpp"

#include <cstdlib>

namespace qw {

long long max_tuple_budget() {
  if (const char* env = std::getenv("QW_MAX_TUPLES")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1000000;
}

}  // namespace qw
