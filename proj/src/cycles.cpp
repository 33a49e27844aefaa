#include "qw/cycles.hpp"

#include "qw/zqlin.hpp"

#include <sstream>

namespace qw {

void FormalChain::add_term(const std::vector<int>& t, long long k) {
  if (k == 0) return;
  auto it = terms.find(t);
  if (it == terms.end()) {
    terms[t] = k;
  } else {
    it->second += k;
    if (it->second == 0) terms.erase(it);
  }
}

std::string FormalChain::show() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, k] : terms) {
    if (k < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    long long ak = k < 0 ? -k : k;
    if (ak != 1) os << ak << "*";
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    first = false;
  }
  return os.str();
}

FormalChain chain_from_crossings(const std::vector<ColoredCrossing>& list) {
  FormalChain c;
  c.level = 2;
  for (const auto& r : list) {
    if (r.sign != 1 && r.sign != -1) throw input_error("crossing sign must be +1 or -1");
    if (r.a != r.b) c.add_term({r.a, r.b}, r.sign);
  }
  return c;
}

FormalChain coloring_chain(const KnotDiagram& k, const std::vector<int>& coloring) {
  std::vector<ColoredCrossing> list;
  for (int t = 0; t < k.crossing_count(); ++t) {
    auto [x, y] = k.weight_colors(t, coloring);
    list.push_back({x, y, k.crossings()[t].sign});
  }
  return chain_from_crossings(list);
}

CycleCheck is_cycle(const FormalChain& c, const FiniteQuandle& x, Theory theory) {
  CycleCheck res;
  res.boundary.level = c.level - 1;
  for (const auto& [t, k] : c.terms) {
    for (int v : t)
      if (v < 0 || v >= x.size())
        throw input_error("chain tuple entry outside the quandle");
    if (theory == Theory::quandle && degenerate_tuple(t)) continue;
    for (const auto& [target, coef] : untwisted_boundary(x, t)) {
      if (theory == Theory::quandle && degenerate_tuple(target)) continue;
      res.boundary.add_term(target, k * coef);
    }
  }
  res.ok = res.boundary.is_zero();
  return res;
}

std::optional<FormalChain> is_null_homologous(const FormalChain& c, const FiniteQuandle& x,
                                              long q, Theory theory) {
  CycleCheck chk = is_cycle(c, x, theory);
  if (!chk.ok)
    throw input_error("not a cycle; boundary remainder " + chk.boundary.show());

  ChainComplexSpec spec = ChainComplexSpec::untwisted(x, theory, q);
  BoundaryMatrix b = boundary_matrix(spec, c.level + 1);
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < b.row_basis.size(); ++i) pos[b.row_basis[i]] = static_cast<int>(i);
  std::vector<Int> rhs(b.rows(), Int(0));
  for (const auto& [t, k] : c.terms) {
    auto it = pos.find(t);
    if (it == pos.end()) {
      if (theory == Theory::quandle && degenerate_tuple(t)) continue;
      throw input_error("chain tuple outside the theory basis");
    }
    rhs[it->second] = static_cast<long>(k);
  }
  IntMat m = b.dense();
  FormalChain w;
  w.level = c.level + 1;
  if (q == 0) {
    auto sol = solve_integer(m, rhs);
    if (!sol) return std::nullopt;
    for (int j = 0; j < m.cols(); ++j)
      if ((*sol)[j] != 0) w.add_term(b.col_basis[j], (*sol)[j].get_si());
  } else {
    std::vector<long> rhsq(rhs.size());
    for (size_t i = 0; i < rhs.size(); ++i) rhsq[i] = mod_norm(rhs[i].get_si(), q);
    auto sol = solve_mod(m, rhsq, q);
    if (!sol) return std::nullopt;
    for (int j = 0; j < m.cols(); ++j)
      if ((*sol)[j] != 0) w.add_term(b.col_basis[j], (*sol)[j]);
  }
  return w;
}

CoefficientModule::Elem kronecker_pairing(const Cochain& phi, const FormalChain& c) {
  if (phi.level != c.level) throw input_error("pairing needs matching levels");
  const CoefficientModule& a = phi.coeff;
  auto acc = a.zero();
  for (const auto& [t, k] : c.terms)
    acc = a.add(acc, a.scal(mod_norm(k, a.q()), phi.eval(t)));
  return acc;
}

GroupRingElement invariant_via_pairing(const KnotDiagram& k, const FiniteQuandle& x,
                                       const Cochain& phi) {
  CocycleCheck chk = is_cocycle(x, phi, Theory::quandle, false);
  if (!chk.ok) throw input_error("the state-sum needs a cocycle, got: " + chk.detail);
  GroupRingElement out;
  for (const auto& col : k.colorings(x))
    out.add(kronecker_pairing(phi, coloring_chain(k, col)));
  return out;
}

}  // namespace qw
