// Acceptance suite: one pass/fail line per bundled reproduction check.

#include <cstring>
#include <iostream>

#include "qw/reproduce.hpp"

int main(int argc, char** argv) {
  std::string data_dir = "data";
  for (int i = 1; i < argc - 1; ++i)
    if (std::strcmp(argv[i], "--data") == 0) data_dir = argv[i + 1];

  auto results = qw::run_reproduction_suite(data_dir);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " ("
              << static_cast<long>(r.wall_ms) << "ms): " << r.detail << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES above")
            << "\n";
  return all ? 0 : 1;
}
