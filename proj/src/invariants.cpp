#include "qw/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "qw/homology.hpp"

namespace qw {

void GroupRingElement::add(const std::vector<long>& a, long long k) {
  if (k == 0) return;
  auto it = terms.find(a);
  if (it == terms.end()) {
    terms[a] = k;
  } else {
    it->second += k;
    if (it->second == 0) terms.erase(it);
  }
}

long long GroupRingElement::mass() const {
  long long m = 0;
  for (const auto& [a, k] : terms) m += k;
  return m;
}

GroupRingElement GroupRingElement::trivial(const CoefficientModule& a, long long k) {
  GroupRingElement g;
  g.add(a.zero(), k);
  return g;
}

std::string GroupRingElement::show(const CoefficientModule& a) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, k] : terms) {
    if (!first) os << " + ";
    if (k != 1) os << k << "*";
    os << "[" << a.show(e) << "]";
    first = false;
  }
  return os.str();
}

namespace {

void require_cocycle(const FiniteQuandle& x, const Cochain& phi, int level, bool twisted) {
  if (phi.level != level)
    throw input_error("expected a level-" + std::to_string(level) + " cochain");
  if (phi.quandle_size != x.size())
    throw input_error("cochain was built for a quandle of size " +
                      std::to_string(phi.quandle_size));
  CocycleCheck chk = is_cocycle(x, phi, Theory::quandle, twisted);
  if (!chk.ok)
    throw input_error("the state-sum needs a cocycle, got: " + chk.detail);
}

CoefficientModule::Elem coloring_weight(const KnotDiagram& k, const Cochain& phi,
                                        const std::vector<int>& col, bool twisted) {
  const CoefficientModule& a = phi.coeff;
  auto acc = a.zero();
  for (int t = 0; t < k.crossing_count(); ++t) {
    auto [cx, cy] = k.weight_colors(t, col);
    auto v = phi.eval({cx, cy});
    if (k.crossings()[t].sign < 0) v = a.neg(v);
    if (twisted) v = a.t_pow(v, -k.crossings()[t].alex);
    acc = a.add(acc, v);
  }
  return acc;
}

}  // namespace

GroupRingElement cocycle_invariant(const KnotDiagram& k, const FiniteQuandle& x,
                                   const Cochain& phi) {
  require_cocycle(x, phi, 2, false);
  GroupRingElement out;
  for (const auto& col : k.colorings(x))
    out.add(coloring_weight(k, phi, col, false));
  return out;
}

GroupRingElement twisted_cocycle_invariant(const KnotDiagram& k, const FiniteQuandle& x,
                                           const Cochain& phi) {
  if (!k.connected())
    throw input_error("the twisted invariant needs a connected diagram");
  require_cocycle(x, phi, 2, true);
  GroupRingElement out;
  for (const auto& col : k.colorings(x))
    out.add(coloring_weight(k, phi, col, true));
  return out;
}

std::vector<CoefficientModule::Elem> lopes_family(const KnotDiagram& k,
                                                  const FiniteQuandle& x,
                                                  const Cochain& phi) {
  require_cocycle(x, phi, 2, false);
  std::vector<CoefficientModule::Elem> fam;
  for (const auto& col : k.colorings(x)) fam.push_back(coloring_weight(k, phi, col, false));
  std::sort(fam.begin(), fam.end());
  return fam;
}

std::vector<GroupRingElement> link_component_vector(const KnotDiagram& k,
                                                    const FiniteQuandle& x,
                                                    const Cochain& phi) {
  require_cocycle(x, phi, 2, false);
  const CoefficientModule& a = phi.coeff;
  std::vector<GroupRingElement> out(k.component_count());
  for (const auto& col : k.colorings(x)) {
    std::vector<CoefficientModule::Elem> acc(k.component_count(), a.zero());
    for (int t = 0; t < k.crossing_count(); ++t) {
      auto ca = k.crossing_arcs(t);
      auto [cx, cy] = k.weight_colors(t, col);
      auto v = phi.eval({cx, cy});
      if (ca.sign < 0) v = a.neg(v);
      acc[ca.under_component] = a.add(acc[ca.under_component], v);
    }
    for (int i = 0; i < k.component_count(); ++i) out[i].add(acc[i]);
  }
  return out;
}

CoefficientModule::Elem surface_weight(const std::vector<TriplePointRecord>& records,
                                       const FiniteQuandle& x, const Cochain& theta,
                                       bool twisted) {
  require_cocycle(x, theta, 3, twisted);
  const CoefficientModule& a = theta.coeff;
  auto acc = a.zero();
  for (const auto& r : records) {
    if (r.sign != 1 && r.sign != -1) throw input_error("triple point sign must be +1 or -1");
    for (int c : {r.x, r.y, r.z})
      if (c < 0 || c >= x.size()) throw input_error("triple point color out of range");
    auto v = theta.eval({r.x, r.y, r.z});
    if (r.sign < 0) v = a.neg(v);
    if (twisted) v = a.t_pow(v, -r.alex);
    acc = a.add(acc, v);
  }
  return acc;
}

GroupRingElement surface_state_sum(const std::vector<std::vector<TriplePointRecord>>& batches,
                                   const FiniteQuandle& x, const Cochain& theta,
                                   bool twisted) {
  GroupRingElement out;
  for (const auto& records : batches) out.add(surface_weight(records, x, theta, twisted));
  return out;
}

LaurentPoly bracket(const KnotDiagram& k, bool loop_norm) {
  int c = k.crossing_count();
  LaurentPoly delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  LaurentPoly out;
  if (c == 0) {
    int loops = k.component_count();
    return delta.pow(loops - (loop_norm ? 1 : 0));
  }
  std::vector<int> alpha(4 * c);
  for (int e = 0; e < k.edge_count(); ++e) {
    alpha[k.edge_head_dart(e)] = k.edge_tail_dart(e);
    alpha[k.edge_tail_dart(e)] = k.edge_head_dart(e);
  }
  for (long long state = 0; state < (1LL << c); ++state) {
    // at each crossing the A-smoothing joins slots (0,1) and (2,3),
    // the B-smoothing joins (0,3) and (1,2)
    std::vector<int> partner(4 * c);
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      bool a_smooth = !(state >> i & 1);
      if (a_smooth) {
        ++a_count;
        partner[4 * i + 0] = 4 * i + 1;
        partner[4 * i + 1] = 4 * i + 0;
        partner[4 * i + 2] = 4 * i + 3;
        partner[4 * i + 3] = 4 * i + 2;
      } else {
        partner[4 * i + 0] = 4 * i + 3;
        partner[4 * i + 3] = 4 * i + 0;
        partner[4 * i + 1] = 4 * i + 2;
        partner[4 * i + 2] = 4 * i + 1;
      }
    }
    int loops = 0;
    std::vector<char> seen(4 * c, 0);
    for (int d0 = 0; d0 < 4 * c; ++d0) {
      if (seen[d0]) continue;
      int d = d0;
      while (!seen[d]) {
        seen[d] = 1;
        int p = partner[d];
        seen[p] = 1;
        d = alpha[p];
      }
      ++loops;
    }
    LaurentPoly term = LaurentPoly::mono(a_count - (c - a_count));
    out = out.plus(term.times(delta.pow(loops - (loop_norm ? 1 : 0))));
  }
  return out;
}

LaurentPoly normalized_bracket(const KnotDiagram& k) {
  int w = k.writhe();
  // (-A)^{-3w}
  int e = -3 * w;
  long long sign = (e % 2 == 0) ? 1 : -1;
  return bracket(k, true).times(LaurentPoly::mono(e, sign));
}

LaurentPoly jones(const KnotDiagram& k) {
  LaurentPoly l = normalized_bracket(k);
  LaurentPoly v;
  for (auto [e, coef] : l.c) v.add_term(-e, coef);  // A = t^{-1/4}, quarter units
  int step = (k.component_count() % 2 == 1) ? 4 : 2;
  for (auto [e, coef] : v.c) {
    (void)coef;
    if (e % step != 0)
      throw std::logic_error("Jones exponents fell off the expected lattice");
  }
  return v;
}

std::string jones_to_string(const LaurentPoly& v) { return v.show("t", 4); }

}  // namespace qw
