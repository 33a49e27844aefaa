#pragma once

#include <map>
#include <string>
#include <vector>

#include "qw/cochain.hpp"
#include "qw/diagram.hpp"
#include "qw/laurent.hpp"

namespace qw {

// Value of a state-sum in the group ring Z[A], A written multiplicatively;
// keys are coefficient-vector representations of module elements.
struct GroupRingElement {
  std::map<std::vector<long>, long long> terms;

  void add(const std::vector<long>& a, long long k = 1);
  long long mass() const;
  // k * [0] for the module's zero element
  static GroupRingElement trivial(const CoefficientModule& a, long long k);
  std::string show(const CoefficientModule& a) const;  // "4*[0] + 12*[T+1]"
  bool operator==(const GroupRingElement& o) const { return terms == o.terms; }
  bool operator!=(const GroupRingElement& o) const { return !(terms == o.terms); }
};

// Untwisted state-sum Phi(K) with Boltzmann weight phi(x,y)^{eps}.
// Rejects phi that is not a quandle 2-cocycle.
GroupRingElement cocycle_invariant(const KnotDiagram& k, const FiniteQuandle& x,
                                   const Cochain& phi);

// Twisted state-sum Phi_T(K), weight [phi(x,y)^{eps}]^{T^{-L(tau)}}; needs a
// connected diagram.
GroupRingElement twisted_cocycle_invariant(const KnotDiagram& k, const FiniteQuandle& x,
                                           const Cochain& phi);

// The per-coloring family of weights, as a canonically sorted multiset.
std::vector<CoefficientModule::Elem> lopes_family(const KnotDiagram& k,
                                                  const FiniteQuandle& x,
                                                  const Cochain& phi);

// One state-sum per link component, restricted to crossings whose under-arcs
// lie on that component.
std::vector<GroupRingElement> link_component_vector(const KnotDiagram& k,
                                                    const FiniteQuandle& x,
                                                    const Cochain& phi);

// One triple point of a knotted-surface diagram: source colors of the bottom,
// middle and top sheets, the sign, and the Alexander number.
struct TriplePointRecord {
  int x, y, z;
  int sign;
  int alex;
};

// Product of triple-point weights for one coloring's record list.
CoefficientModule::Elem surface_weight(const std::vector<TriplePointRecord>& records,
                                       const FiniteQuandle& x, const Cochain& theta,
                                       bool twisted);
// Batch sum over several colorings' record lists.
GroupRingElement surface_state_sum(const std::vector<std::vector<TriplePointRecord>>& batches,
                                   const FiniteQuandle& x, const Cochain& theta,
                                   bool twisted);

// Kauffman bracket by expansion over the 2^c smoothings, with closed-loop
// factor (-A^2 - A^-2). The default keeps every loop factor (the spin-model
// trace, unknot -> -A^2-A^-2); loop_norm divides one factor out.
LaurentPoly bracket(const KnotDiagram& k, bool loop_norm = false);
// (-A)^{-3w} times the loop-normalized bracket.
LaurentPoly normalized_bracket(const KnotDiagram& k);
// Jones polynomial V(t) via A = t^{-1/4}; exponents are in quarter units of t
// (print with jones_to_string).
LaurentPoly jones(const KnotDiagram& k);
std::string jones_to_string(const LaurentPoly& v);

}  // namespace qw
