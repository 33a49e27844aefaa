#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qw/cochain.hpp"
#include "qw/common.hpp"
#include "qw/modpoly.hpp"
#include "qw/quandle.hpp"
#include "qw/snf.hpp"

namespace qw {

enum class Theory { rack, degenerate, quandle };
const char* theory_name(Theory t);
Theory theory_from_name(const std::string& s);

// Chain complex of a finite quandle. Untwisted complexes set T = 1 and take
// coefficients in Z (q = 0) or Z_q; twisted complexes take coefficients in a
// finite Alexander module whose T action deforms the boundary.
struct ChainComplexSpec {
  FiniteQuandle quandle;
  Theory theory = Theory::quandle;
  bool twisted = false;
  long q = 0;                              // scalar modulus; 0 = integers (untwisted only)
  std::optional<CoefficientModule> module; // required when twisted
  int max_level = 6;

  static ChainComplexSpec untwisted(FiniteQuandle x, Theory th, long q);
  static ChainComplexSpec over_module(FiniteQuandle x, Theory th, CoefficientModule a);
  int block() const { return twisted ? module->dim() : 1; }
};

// Ordered tuple bases: lexicographic by element index. Quandle theory keeps
// only non-degenerate tuples, degenerate theory only degenerate ones.
std::vector<std::vector<int>> tuple_basis(const FiniteQuandle& x, Theory theory, int n);

// Sparse matrix of the boundary map C_n -> C_{n-1} on the declared bases.
// Twisted entries expand T over the module's companion matrix; scalar entries
// live in Z (q = 0) or in [0, q).
struct BoundaryMatrix {
  int level = 0;
  Theory theory = Theory::quandle;
  bool twisted = false;
  long q = 0;
  int block = 1;
  std::vector<std::vector<int>> row_basis, col_basis;
  std::vector<std::map<int, long long>> cols;  // cols[c][r] = entry

  int rows() const { return static_cast<int>(row_basis.size()) * block; }
  int col_count() const { return static_cast<int>(col_basis.size()) * block; }
  IntMat dense() const;
  bool product_is_zero(const BoundaryMatrix& next) const;  // this  next == 0
};

BoundaryMatrix boundary_matrix(const ChainComplexSpec& spec, int n);
// Matrix of delta: C^{n} -> C^{n+1}, (delta f)(c) = (-1)^{n+1} f(boundary c).
BoundaryMatrix coboundary_matrix(const ChainComplexSpec& spec, int n);

AbelianGroupDescriptor homology(const ChainComplexSpec& spec, int n);
AbelianGroupDescriptor cohomology(const ChainComplexSpec& spec, int n);

// Number of n-cocycles / n-coboundaries over Z_q (finite coefficients only).
Int cocycle_count(const ChainComplexSpec& spec, int n);
Int coboundary_count(const ChainComplexSpec& spec, int n);

// Deterministic generating sets (echelonized via column Hermite form).
std::vector<Cochain> cocycle_basis(const ChainComplexSpec& spec, int n);
std::vector<Cochain> coboundary_basis(const ChainComplexSpec& spec, int n);

struct CocycleCheck {
  bool ok = true;
  std::vector<int> witness;  // first tuple where the condition fails
  std::string detail;
};
CocycleCheck is_cocycle(const FiniteQuandle& x, const Cochain& f, Theory theory,
                        bool twisted);
// theory and twistedness taken from the cochain itself
CocycleCheck is_cocycle(const FiniteQuandle& x, const Cochain& f);

// Solves delta psi = f; returns the witness cochain one level down.
std::optional<Cochain> is_coboundary(const FiniteQuandle& x, const Cochain& f,
                                     Theory theory = Theory::quandle);
// Witness psi with delta psi = f - g.
std::optional<Cochain> cohomologous(const FiniteQuandle& x, const Cochain& f,
                                    const Cochain& g, Theory theory = Theory::quandle);

// Level-1 condition T eta(x1) + (1-T) eta(x2) = eta(x1*x2), checked directly.
bool is_quandle_hom_to_module(const FiniteQuandle& x, const Cochain& eta);

// Untwisted boundary (T = 1) of a single tuple, as tuple -> coefficient.
std::map<std::vector<int>, long long> untwisted_boundary(const FiniteQuandle& x,
                                                         const std::vector<int>& tuple);

// Exact sequence 0 -> N -i-> G -p-> A -> 0 of finite Alexander modules with a
// set-theoretic section s (p s = id, s(0) = 0). Maps are element-index tables.
struct ModuleExactSequence {
  CoefficientModule n_mod = CoefficientModule::plain(2);
  CoefficientModule g_mod = CoefficientModule::plain(2);
  CoefficientModule a_mod = CoefficientModule::plain(2);
  std::vector<long long> incl;  // |N| entries, indices into G
  std::vector<long long> proj;  // |G| entries, indices into A
  std::vector<long long> sect;  // |A| entries, indices into G
  void validate() const;        // throws input_error if not exact / not linear
};

struct ObstructionResult {
  Cochain phi;                        // twisted 2-cocycle with values in N
  bool extends = false;               // true iff [phi] = 0
  std::optional<Cochain> extension;   // level-1 witness eta' over G, p eta' = eta
};

// The obstruction to lifting the quandle homomorphism eta: X -> A through p.
ObstructionResult obstruction_class(const FiniteQuandle& x, const Cochain& eta,
                                    const ModuleExactSequence& seq);

}  // namespace qw
