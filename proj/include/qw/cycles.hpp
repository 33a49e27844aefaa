#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qw/cochain.hpp"
#include "qw/diagram.hpp"
#include "qw/homology.hpp"
#include "qw/invariants.hpp"

namespace qw {

// Finitely supported integer chain on n-tuples of quandle elements. Quandle
// theory keeps degenerate tuples at coefficient zero.
struct FormalChain {
  int level = 0;
  std::map<std::vector<int>, long long> terms;

  void add_term(const std::vector<int>& t, long long k);
  bool is_zero() const { return terms.empty(); }
  std::string show() const;  // "(0,1) + (1,2) - (1,0)"
  bool operator==(const FormalChain& o) const {
    return level == o.level && terms == o.terms;
  }
};

// One colored classical crossing: over-color b, under-color a on the arc away
// from which the over-normal points, and the crossing sign.
struct ColoredCrossing {
  int a, b;
  int sign;
};

// Sum of sign * (a, b) with degenerate terms (x, x) dropped.
FormalChain chain_from_crossings(const std::vector<ColoredCrossing>& list);

// The 2-chain carried by one coloring of a diagram.
FormalChain coloring_chain(const KnotDiagram& k, const std::vector<int>& coloring);

struct CycleCheck {
  bool ok = true;
  FormalChain boundary;  // the remainder, zero iff ok
};
CycleCheck is_cycle(const FormalChain& c, const FiniteQuandle& x,
                    Theory theory = Theory::quandle);

// Witness w with boundary(w) = c, over Z (q = 0) or Z_q. Rejects non-cycles.
std::optional<FormalChain> is_null_homologous(const FormalChain& c, const FiniteQuandle& x,
                                              long q = 0,
                                              Theory theory = Theory::quandle);

// <phi, c> = sum of c(t) phi(t).
CoefficientModule::Elem kronecker_pairing(const Cochain& phi, const FormalChain& c);

// State-sum evaluated by pairing the cocycle with each coloring's 2-cycle;
// must equal cocycle_invariant exactly.
GroupRingElement invariant_via_pairing(const KnotDiagram& k, const FiniteQuandle& x,
                                       const Cochain& phi);

}  // namespace qw
