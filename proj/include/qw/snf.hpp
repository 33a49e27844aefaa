#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qw {

using Int = mpz_class;

class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  // horizontal concatenation [*this | o]
  IntMat hcat(const IntMat& o) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// u * a * v = d with u, v unimodular and d diagonal with a divisibility chain.
// u and v are tracked only when with_transforms is set.
struct SnfResult {
  IntMat d, u, v;
  int rank = 0;
  std::vector<Int> divisors() const;  // d_1, ..., d_rank (all positive)
};

SnfResult smith_normal_form(const IntMat& a, bool with_transforms = true);
int rank_of(const IntMat& a);

// Columns form a Z-basis of { x : a x = 0 }.
IntMat kernel_basis(const IntMat& a);

// One integer solution of a x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b);

struct AbelianGroupDescriptor {
  long free_rank = 0;
  std::vector<Int> torsion;  // d_1 | d_2 | ..., every d_i > 1
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  Int torsion_order() const;
  std::string show() const;  // "0", "Z", "Z^2 + Z_2 + Z_6", ...
  bool operator==(const AbelianGroupDescriptor& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const AbelianGroupDescriptor& o) const { return !(*this == o); }
};

// Invariant factors of L/span(sub), where the columns of lattice_basis form a
// basis of the lattice L and the columns of sub span a finite-index subgroup
// expressible in L (throws otherwise).
AbelianGroupDescriptor quotient_group(const IntMat& lattice_basis, const IntMat& sub);

}  // namespace qw
