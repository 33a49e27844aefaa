#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qw/cochain.hpp"
#include "qw/common.hpp"
#include "qw/modpoly.hpp"

namespace qw {

struct AxiomReport {
  bool idempotent = true;
  bool right_invertible = true;
  bool distributive = true;
  // first violating elements; unused positions are -1
  std::array<int, 3> witness{-1, -1, -1};
  bool pass() const { return idempotent && right_invertible && distributive; }
  std::string describe() const;
};

// Checks the three quandle axioms on a raw operation table.
// Throws input_error for entries out of range.
AxiomReport verify_axioms(const std::vector<std::vector<int>>& table);

// Immutable finite quandle: elements 0..n-1 with operation table[a][b] = a*b.
class FiniteQuandle {
 public:
  FiniteQuandle(std::string label, std::vector<std::vector<int>> table);

  int size() const { return n_; }
  int op(int a, int b) const { return table_[a][b]; }
  // the unique c with c * b = a
  int op_inv(int a, int b) const { return inv_[a][b]; }
  const std::string& label() const { return label_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool operator==(const FiniteQuandle& o) const { return table_ == o.table_; }

 private:
  int n_;
  std::string label_;
  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> inv_;
};

FiniteQuandle make_trivial(int n);
FiniteQuandle make_dihedral(int n);
// Alexander quandle Z_q[T]/(h) with a*b = Ta + (1-T)b; h constant term first.
FiniteQuandle make_alexander(long q, const std::vector<long>& h);
// n-fold conjugation quandle a*b = b^{-n} a b^n on a subset of a finite group
// given by its multiplication table; the subset must be closed under the operation.
FiniteQuandle make_conjugation(const std::vector<std::vector<int>>& group_mult,
                               const std::vector<int>& subset, int exponent,
                               const std::string& label = "conj");
// The six 4-cycles of S_4 under conjugation, in the order a,A,b,B,c,C.
FiniteQuandle make_qs6();

struct QuandleHom {
  std::vector<int> values;  // f: source index -> target index
};

// Validates f(a*b) = f(a)*f(b); returns the witness pair on failure.
std::optional<std::array<int, 2>> hom_violation(const FiniteQuandle& src,
                                                const FiniteQuandle& dst,
                                                const std::vector<int>& values);
bool is_quandle_hom(const FiniteQuandle& src, const FiniteQuandle& dst,
                    const std::vector<int>& values);

// Backtracking isomorphism search, exact for the sizes this tool handles.
std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& a,
                                                 const FiniteQuandle& b);

// Alexander extension AE(X, A, phi): quandle on A x X with
// (a1,x1)*(a2,x2) = (a1*a2 + phi(x1,x2), x1*x2); element (a,x) has
// index a_index * |X| + x. phi must be a twisted 2-cocycle.
FiniteQuandle alexander_extension(const FiniteQuandle& x, const CoefficientModule& a,
                                  const Cochain& phi);

// Abelian extension E(X, Z_q, phi): (a1,x1)*(a2,x2) = (a1 + phi(x1,x2), x1*x2);
// phi must be an untwisted 2-cocycle with values in Z_q.
FiniteQuandle abelian_extension(const FiniteQuandle& x, long q, const Cochain& phi);

// The 2-cocycle of the extension Z_{p^m}[T]/(h) over Z_{p^{m-1}}[T]/(h mod p^{m-1})
// with fiber Z_p[T]/(h mod p), extracted by the base-p digit-carry construction.
struct ExtensionCocycle {
  FiniteQuandle base;        // X = Z_{p^{m-1}}[T]/(h bar)
  CoefficientModule fiber;   // A = Z_p[T]/(h tilde)
  Cochain phi;               // twisted 2-cocycle on X with values in A
  FiniteQuandle total;       // Z_{p^m}[T]/(h)
};
ExtensionCocycle extension_cocycle(long p, int m, const std::vector<long>& h);

// Pointwise evaluator for the h = 0 case: the cocycle value on two explicitly
// given Laurent polynomials over Z_{p^{m-1}}, as a Laurent polynomial over Z_p.
// Laurent polynomials are maps exponent -> coefficient.
std::map<int, long> extension_cocycle_eval(long p, int m,
                                           const std::map<int, long>& lbar,
                                           const std::map<int, long>& mbar);

}  // namespace qw
