#pragma once

#include <optional>
#include <vector>

#include "qw/snf.hpp"

namespace qw {

// Linear algebra over Z_q for possibly composite q. Columns are reduced by
// gcd transforms with annihilator closure, so membership and solving work
// greedily and every entry stays in [0, q).

// Generating columns of { x in Z_q^n : a x = 0 (mod q) }.
std::vector<std::vector<long>> kernel_mod(const IntMat& a, long q);

// One solution of a x = b (mod q), if any.
std::optional<std::vector<long>> solve_mod(const IntMat& a, const std::vector<long>& b,
                                           long q);

// Column Hermite form of the lattice spanned by the columns of a together
// with q Z^n; entries reduced mod q, zero columns dropped. Deterministic.
IntMat hnf_columns_modq(const IntMat& a, long q);

// |(span of columns + qZ^n) / qZ^n|
Int span_size_mod(const IntMat& a, long q);

}  // namespace qw
