#pragma once

#include <string>
#include <vector>

#include "qw/cochain.hpp"
#include "qw/laurent.hpp"

namespace qw {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double wall_ms = 0;
};

// The bundled desk-scale reproduction suite; data_dir holds the shipped PD
// files. inject_fault perturbs one 3-cochain by a non-cocycle term so the
// corresponding check is seen to fail.
std::vector<CheckResult> run_reproduction_suite(const std::string& data_dir,
                                          bool inject_fault = false);

// The S_4 2-cocycle: the sum of chi_{a,b} over distinct a, b both != T.
Cochain s4_two_cocycle();
// The generating 3-cocycle of H^3_Q(R_3; Z_3).
Cochain r3_three_cocycle();

// Jones values frozen from the independent skein oracle (quarter-exponent keys).
LaurentPoly frozen_jones_3_1();         // left-handed trefoil
LaurentPoly frozen_jones_3_1_mirror();
LaurentPoly frozen_jones_4_1();

}  // namespace qw
