#include "qw/homology.hpp"

#include <algorithm>

#include "qw/zqlin.hpp"
#include <sstream>

namespace qw {

const char* theory_name(Theory t) {
  switch (t) {
    case Theory::rack: return "rack";
    case Theory::degenerate: return "degenerate";
    case Theory::quandle: return "quandle";
  }
  return "?";
}

Theory theory_from_name(const std::string& s) {
  if (s == "rack" || s == "R") return Theory::rack;
  if (s == "degenerate" || s == "D") return Theory::degenerate;
  if (s == "quandle" || s == "Q") return Theory::quandle;
  throw input_error("unknown theory: " + s);
}

ChainComplexSpec ChainComplexSpec::untwisted(FiniteQuandle x, Theory th, long q) {
  if (q < 0 || q == 1) throw input_error("coefficient modulus must be 0 (integers) or >= 2");
  ChainComplexSpec s{std::move(x), th, false, q, std::nullopt};
  return s;
}

ChainComplexSpec ChainComplexSpec::over_module(FiniteQuandle x, Theory th,
                                               CoefficientModule a) {
  ChainComplexSpec s{std::move(x), th, true, a.q(), std::move(a)};
  return s;
}

std::vector<std::vector<int>> tuple_basis(const FiniteQuandle& x, Theory theory, int n) {
  if (n < 0) throw input_error("tuple level must be >= 0");
  if (n == 0) {
    if (theory == Theory::degenerate) return {};
    return {std::vector<int>{}};
  }
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= x.size();
    if (total > max_tuple_budget())
      throw size_error("level-" + std::to_string(n) + " computation needs " +
                       std::to_string(x.size()) + "^" + std::to_string(n) +
                       " generator tuples, over the budget of " +
                       std::to_string(max_tuple_budget()));
  }
  std::vector<std::vector<int>> basis;
  std::vector<int> t(n, 0);
  for (;;) {
    bool deg = degenerate_tuple(t);
    bool keep = theory == Theory::rack || ((theory == Theory::degenerate) == deg);
    if (keep) basis.push_back(t);
    int i = n - 1;
    while (i >= 0 && t[i] == x.size() - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return basis;
}

IntMat BoundaryMatrix::dense() const {
  IntMat m(rows(), col_count());
  for (int c = 0; c < col_count(); ++c)
    for (const auto& [r, v] : cols[c]) m.at(r, c) = static_cast<long>(v);
  return m;
}

bool BoundaryMatrix::product_is_zero(const BoundaryMatrix& next) const {
  for (int c = 0; c < next.col_count(); ++c) {
    std::map<int, long long> acc;
    for (const auto& [mid, v] : next.cols[c])
      for (const auto& [r, w] : cols[mid]) acc[r] += v * w;
    for (const auto& [r, v] : acc) {
      long long vv = q > 0 ? v % q : v;
      if (vv != 0) return false;
    }
  }
  return true;
}

namespace {

struct LinearCoeff {
  long long c0 = 0;  // coefficient of 1
  long long c1 = 0;  // coefficient of T
};

// boundary of one tuple as a formal sum of tuples with coefficients c0 + c1 T
std::map<std::vector<int>, LinearCoeff> boundary_terms(const FiniteQuandle& x,
                                                       const std::vector<int>& t) {
  std::map<std::vector<int>, LinearCoeff> out;
  int n = static_cast<int>(t.size());
  if (n < 2) return out;
  for (int i = 1; i <= n; ++i) {
    long long sign = (i % 2 == 0) ? 1 : -1;
    std::vector<int> del, trans;
    del.reserve(n - 1);
    trans.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == i - 1) continue;
      del.push_back(t[j]);
      trans.push_back(j < i - 1 ? x.op(t[j], t[i - 1]) : t[j]);
    }
    out[del].c1 += sign;
    out[trans].c0 -= sign;
  }
  return out;
}

void check_spec(const ChainComplexSpec& spec) {
  if (spec.twisted) {
    if (!spec.module) throw input_error("twisted complex needs a coefficient module");
    if (spec.q != spec.module->q())
      throw input_error("twisted complex modulus must match the module");
  } else if (spec.q == 1 || spec.q < 0) {
    throw input_error("coefficient modulus must be 0 (integers) or >= 2");
  }
}

}  // namespace

BoundaryMatrix boundary_matrix(const ChainComplexSpec& spec, int n) {
  check_spec(spec);
  if (n < 1 || n > spec.max_level)
    throw input_error("boundary level " + std::to_string(n) + " outside 1.." +
                      std::to_string(spec.max_level));
  const FiniteQuandle& x = spec.quandle;
  BoundaryMatrix b;
  b.level = n;
  b.theory = spec.theory;
  b.twisted = spec.twisted;
  b.q = spec.q;
  b.block = spec.block();
  b.row_basis = tuple_basis(x, spec.theory, n - 1);
  b.col_basis = tuple_basis(x, spec.theory, n);
  b.cols.assign(static_cast<size_t>(b.col_count()), {});
  if (n == 1) return b;  // boundary vanishes in low levels

  std::map<std::vector<int>, int> row_pos;
  for (size_t i = 0; i < b.row_basis.size(); ++i) row_pos[b.row_basis[i]] = static_cast<int>(i);

  std::vector<std::vector<long>> tmat;
  if (spec.twisted) tmat = spec.module->t_matrix(1);

  for (size_t cpos = 0; cpos < b.col_basis.size(); ++cpos) {
    auto terms = boundary_terms(x, b.col_basis[cpos]);
    for (const auto& [target, coef] : terms) {
      auto it = row_pos.find(target);
      if (it == row_pos.end()) {
        bool deg = degenerate_tuple(target);
        if (spec.theory == Theory::quandle && deg) continue;  // quotient by degeneracies
        if (spec.theory == Theory::degenerate && !deg) {
          long long c0 = coef.c0, c1 = coef.c1;
          if (spec.q > 0) {
            c0 = mod_norm(c0, spec.q);
            c1 = mod_norm(c1, spec.q);
          }
          if (c0 != 0 || c1 != 0)
            throw std::logic_error("degenerate subcomplex not preserved by the boundary");
          continue;
        }
        throw std::logic_error("boundary target missing from basis");
      }
      int rpos = it->second;
      if (!spec.twisted) {
        long long v = coef.c0 + coef.c1;  // T = 1
        if (spec.q > 0) v = mod_norm(v, spec.q);
        if (v != 0) b.cols[cpos][rpos] = v;
      } else {
        int d = b.block;
        for (int jj = 0; jj < d; ++jj)
          for (int ii = 0; ii < d; ++ii) {
            long long v = coef.c0 * (ii == jj ? 1 : 0) + coef.c1 * tmat[ii][jj];
            v = mod_norm(v, spec.q);
            if (v != 0) b.cols[cpos * d + jj][rpos * d + ii] = v;
          }
      }
    }
  }
  return b;
}

BoundaryMatrix coboundary_matrix(const ChainComplexSpec& spec, int n) {
  BoundaryMatrix b = boundary_matrix(spec, n + 1);
  BoundaryMatrix d;
  d.level = n;
  d.theory = b.theory;
  d.twisted = b.twisted;
  d.q = b.q;
  d.block = b.block;
  d.row_basis = b.col_basis;  // (n+1)-tuples
  d.col_basis = b.row_basis;  // n-tuples
  d.cols.assign(static_cast<size_t>(d.col_count()), {});
  long long sign = ((n + 1) % 2 == 0) ? 1 : -1;
  int blk = b.block;
  for (int cB = 0; cB < b.col_count(); ++cB) {
    int spos = cB / blk, jj = cB % blk;
    for (const auto& [rB, v] : b.cols[cB]) {
      int tpos = rB / blk, ii = rB % blk;
      long long w = sign * v;
      if (d.q > 0) w = mod_norm(w, d.q);
      if (w == 0) continue;
      long long& slot = d.cols[tpos * blk + jj][spos * blk + ii];
      slot = d.q > 0 ? mod_norm(slot + w, d.q) : slot + w;
      if (slot == 0) d.cols[tpos * blk + jj].erase(spos * blk + ii);
    }
  }
  return d;
}

namespace {

// integer lattice basis of { x in Z^k : A x = 0 mod q }, via the mod-q kernel
IntMat mod_kernel_lattice(const IntMat& a, long q) {
  int k = a.cols();
  auto gens = kernel_mod(a, q);
  IntMat g(k, static_cast<int>(gens.size()));
  for (int j = 0; j < g.cols(); ++j)
    for (int i = 0; i < k; ++i) g.at(i, j) = gens[j][i];
  return hnf_columns_modq(g, q);
}

IntMat with_q_columns(const IntMat& b, long q, int k) {
  IntMat qi(k, k);
  for (int i = 0; i < k; ++i) qi.at(i, i) = q;
  if (b.cols() == 0) return qi;
  return b.hcat(qi);
}

AbelianGroupDescriptor finite_homology(const IntMat& a, const IntMat& b, long q, int k) {
  if (k == 0) return {};
  IntMat lb = a.rows() == 0 ? IntMat::identity(k) : mod_kernel_lattice(a, q);
  return quotient_group(lb, with_q_columns(b, q, k));
}

AbelianGroupDescriptor integral_homology(const IntMat& a, const IntMat& b, int k) {
  if (k == 0) return {};
  SnfResult sa = smith_normal_form(a, false);
  SnfResult sb = smith_normal_form(b, false);
  AbelianGroupDescriptor g;
  g.free_rank = k - sa.rank - sb.rank;
  for (const Int& d : sb.divisors())
    if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace

AbelianGroupDescriptor homology(const ChainComplexSpec& spec, int n) {
  check_spec(spec);
  BoundaryMatrix dn = boundary_matrix(spec, n);
  BoundaryMatrix dn1 = boundary_matrix(spec, n + 1);
  int k = dn.col_count();
  if (spec.q == 0) return integral_homology(dn.dense(), dn1.dense(), k);
  return finite_homology(dn.dense(), dn1.dense(), spec.q, k);
}

AbelianGroupDescriptor cohomology(const ChainComplexSpec& spec, int n) {
  check_spec(spec);
  BoundaryMatrix up = coboundary_matrix(spec, n);
  BoundaryMatrix down = n >= 1 ? coboundary_matrix(spec, n - 1)
                               : BoundaryMatrix{};
  int k = up.col_count();
  IntMat down_dense = n >= 1 ? down.dense() : IntMat(k, 0);
  if (spec.q == 0) return integral_homology(up.dense(), down_dense, k);
  return finite_homology(up.dense(), down_dense, spec.q, k);
}

Int cocycle_count(const ChainComplexSpec& spec, int n) {
  check_spec(spec);
  if (spec.q == 0) throw input_error("cocycle counting needs finite coefficients");
  BoundaryMatrix up = coboundary_matrix(spec, n);
  int k = up.col_count();
  if (k == 0) return 1;
  auto gens = kernel_mod(up.dense(), spec.q);
  IntMat g(k, static_cast<int>(gens.size()));
  for (int j = 0; j < g.cols(); ++j)
    for (int i = 0; i < k; ++i) g.at(i, j) = gens[j][i];
  return span_size_mod(g, spec.q);
}

Int coboundary_count(const ChainComplexSpec& spec, int n) {
  check_spec(spec);
  if (spec.q == 0) throw input_error("coboundary counting needs finite coefficients");
  if (n < 1) return 1;
  BoundaryMatrix down = coboundary_matrix(spec, n - 1);
  int k = down.rows();
  if (k == 0) return 1;
  return span_size_mod(down.dense(), spec.q);
}

namespace {

Cochain cochain_from_vector(const ChainComplexSpec& spec,
                            const std::vector<std::vector<int>>& basis, int n,
                            const std::vector<Int>& v) {
  Cochain c;
  c.level = n;
  c.quandle_size = spec.quandle.size();
  c.quandle_label = spec.quandle.label();
  c.coeff = spec.twisted ? *spec.module : CoefficientModule::plain(spec.q);
  c.twisted = spec.twisted;
  c.rack_theory = (spec.theory != Theory::quandle);
  int blk = spec.block();
  for (size_t t = 0; t < basis.size(); ++t) {
    CoefficientModule::Elem e(c.coeff.dim(), 0);
    bool nz = false;
    for (int j = 0; j < blk; ++j) {
      long val = mod_norm(v[t * blk + j].get_si(), spec.q);
      e[j] = val;
      nz = nz || val != 0;
    }
    if (nz) c.set(basis[t], e);
  }
  return c;
}

std::vector<Cochain> basis_from_lattice(const ChainComplexSpec& spec, int n,
                                        const std::vector<std::vector<int>>& tuples,
                                        const IntMat& gens) {
  IntMat h = hnf_columns_modq(gens, spec.q);
  std::vector<Cochain> out;
  for (int j = 0; j < h.cols(); ++j) {
    std::vector<Int> v(h.rows());
    bool nonzero = false;
    for (int i = 0; i < h.rows(); ++i) {
      Int r = h.at(i, j) % spec.q;
      if (r < 0) r += spec.q;
      v[i] = r;
      nonzero = nonzero || r != 0;
    }
    if (nonzero) out.push_back(cochain_from_vector(spec, tuples, n, v));
  }
  return out;
}

}  // namespace

std::vector<Cochain> cocycle_basis(const ChainComplexSpec& spec, int n) {
  check_spec(spec);
  if (spec.q == 0) throw input_error("cocycle bases need finite coefficients");
  BoundaryMatrix up = coboundary_matrix(spec, n);
  int k = up.col_count();
  if (k == 0) return {};
  auto gens = kernel_mod(up.dense(), spec.q);
  IntMat g(k, static_cast<int>(gens.size()));
  for (int j = 0; j < g.cols(); ++j)
    for (int i = 0; i < k; ++i) g.at(i, j) = gens[j][i];
  return basis_from_lattice(spec, n, up.col_basis, g);
}

std::vector<Cochain> coboundary_basis(const ChainComplexSpec& spec, int n) {
  check_spec(spec);
  if (spec.q == 0) throw input_error("coboundary bases need finite coefficients");
  if (n < 1) return {};
  BoundaryMatrix down = coboundary_matrix(spec, n - 1);
  int k = down.rows();
  if (k == 0) return {};
  return basis_from_lattice(spec, n, down.row_basis, down.dense());
}

CocycleCheck is_cocycle(const FiniteQuandle& x, const Cochain& f, Theory theory,
                        bool twisted) {
  if (f.quandle_size != x.size())
    throw input_error("cochain quandle size does not match the quandle");
  const CoefficientModule& a = f.coeff;
  CocycleCheck res;
  auto tuples = tuple_basis(x, theory, f.level + 1);
  for (const auto& s : tuples) {
    auto terms = boundary_terms(x, s);
    CoefficientModule::Elem acc = a.zero();
    for (const auto& [t, coef] : terms) {
      CoefficientModule::Elem ft = f.eval(t);
      if (a.is_zero(ft)) continue;
      if (twisted) {
        acc = a.add(acc, a.scal(static_cast<long>(mod_norm(coef.c0, a.q())), ft));
        acc = a.add(acc, a.scal(static_cast<long>(mod_norm(coef.c1, a.q())), a.t_act(ft)));
      } else {
        acc = a.add(acc, a.scal(static_cast<long>(mod_norm(coef.c0 + coef.c1, a.q())), ft));
      }
    }
    if (!a.is_zero(acc)) {
      res.ok = false;
      res.witness = s;
      std::ostringstream os;
      os << "cocycle condition fails on (";
      for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
      os << "): delta f = " << a.show(acc);
      res.detail = os.str();
      return res;
    }
  }
  return res;
}

CocycleCheck is_cocycle(const FiniteQuandle& x, const Cochain& f) {
  return is_cocycle(x, f, f.rack_theory ? Theory::rack : Theory::quandle, f.twisted);
}

std::optional<Cochain> is_coboundary(const FiniteQuandle& x, const Cochain& f,
                                     Theory theory) {
  ChainComplexSpec spec = f.twisted
                              ? ChainComplexSpec::over_module(x, theory, f.coeff)
                              : ChainComplexSpec::untwisted(x, theory, f.coeff.q());
  int n = f.level;
  BoundaryMatrix down = coboundary_matrix(spec, n - 1);
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < down.row_basis.size(); ++i) pos[down.row_basis[i]] = static_cast<int>(i);

  long q = f.coeff.q();
  IntMat m = down.dense();

  int d = f.coeff.dim();
  std::vector<std::vector<long>> solutions;  // per tracked coordinate set
  if (spec.twisted) {
    std::vector<long> rhs(down.rows(), 0);
    for (const auto& [t, v] : f.values) {
      auto it = pos.find(t);
      if (it == pos.end()) {
        if (theory == Theory::quandle && degenerate_tuple(t)) continue;
        throw input_error("cochain tuple outside the theory basis");
      }
      for (int j = 0; j < d; ++j) rhs[it->second * d + j] = v[j];
    }
    auto sol = solve_mod(m, rhs, q);
    if (!sol) return std::nullopt;
    solutions.push_back(std::move(*sol));
  } else {
    // plain coefficients: the system splits into one scalar solve per coordinate
    for (int j = 0; j < d; ++j) {
      std::vector<long> rhs(down.rows(), 0);
      for (const auto& [t, v] : f.values) {
        auto it = pos.find(t);
        if (it == pos.end()) {
          if (theory == Theory::quandle && degenerate_tuple(t)) continue;
          throw input_error("cochain tuple outside the theory basis");
        }
        rhs[it->second] = v[j];
      }
      auto sol = solve_mod(m, rhs, q);
      if (!sol) return std::nullopt;
      solutions.push_back(std::move(*sol));
    }
  }

  Cochain psi;
  psi.level = n - 1;
  psi.quandle_size = f.quandle_size;
  psi.quandle_label = f.quandle_label;
  psi.coeff = f.coeff;
  psi.twisted = f.twisted;
  psi.rack_theory = f.rack_theory;
  const auto& tuples = down.col_basis;
  for (size_t t = 0; t < tuples.size(); ++t) {
    CoefficientModule::Elem e(d, 0);
    bool nz = false;
    for (int j = 0; j < d; ++j) {
      e[j] = spec.twisted ? solutions[0][t * d + j] : solutions[j][t];
      nz = nz || e[j] != 0;
    }
    if (nz) psi.set(tuples[t], e);
  }
  return psi;
}

std::optional<Cochain> cohomologous(const FiniteQuandle& x, const Cochain& f,
                                    const Cochain& g, Theory theory) {
  return is_coboundary(x, f.minus(g), theory);
}

std::map<std::vector<int>, long long> untwisted_boundary(const FiniteQuandle& x,
                                                         const std::vector<int>& tuple) {
  std::map<std::vector<int>, long long> out;
  for (const auto& [t, coef] : boundary_terms(x, tuple)) {
    long long v = coef.c0 + coef.c1;
    if (v != 0) out[t] = v;
  }
  return out;
}

bool is_quandle_hom_to_module(const FiniteQuandle& x, const Cochain& eta) {
  if (eta.level != 1) throw input_error("homomorphism check needs a level-1 cochain");
  const CoefficientModule& a = eta.coeff;
  for (int x1 = 0; x1 < x.size(); ++x1)
    for (int x2 = 0; x2 < x.size(); ++x2) {
      auto lhs = a.star(eta.eval({x1}), eta.eval({x2}));
      if (lhs != eta.eval({x.op(x1, x2)})) return false;
    }
  return true;
}

void ModuleExactSequence::validate() const {
  long long nn = n_mod.size(), ng = g_mod.size(), na = a_mod.size();
  if (static_cast<long long>(incl.size()) != nn ||
      static_cast<long long>(proj.size()) != ng ||
      static_cast<long long>(sect.size()) != na)
    throw input_error("exact sequence maps have wrong sizes");
  if (nn * na != ng) throw input_error("not exact: |N| * |A| != |G|");

  auto linear = [](const CoefficientModule& src, const CoefficientModule& dst,
                   const std::vector<long long>& f) {
    for (long long i = 0; i < src.size(); ++i) {
      auto a = src.from_index(i);
      if (dst.to_index(dst.t_act(dst.from_index(f[i]))) != f[src.to_index(src.t_act(a))])
        return false;
      for (long long j = 0; j < src.size(); ++j) {
        auto s = src.to_index(src.add(a, src.from_index(j)));
        if (dst.to_index(dst.add(dst.from_index(f[i]), dst.from_index(f[j]))) != f[s])
          return false;
      }
    }
    return true;
  };
  if (!linear(n_mod, g_mod, incl)) throw input_error("inclusion is not Lambda-linear");
  if (!linear(g_mod, a_mod, proj)) throw input_error("projection is not Lambda-linear");

  std::vector<char> hit(ng, 0);
  for (long long i = 0; i < nn; ++i) {
    if (incl[i] < 0 || incl[i] >= ng) throw input_error("inclusion index out of range");
    if (hit[incl[i]]) throw input_error("inclusion is not injective");
    hit[incl[i]] = 1;
    if (proj[incl[i]] != 0) throw input_error("p o i != 0");
  }
  long long ker = 0;
  for (long long g = 0; g < ng; ++g) {
    if (proj[g] < 0 || proj[g] >= na) throw input_error("projection index out of range");
    if (proj[g] == 0) ++ker;
  }
  if (ker != nn) throw input_error("not exact at G: |ker p| != |N|");
  if (sect[0] != 0) throw input_error("section is not normalized: s(0) != 0");
  for (long long a = 0; a < na; ++a) {
    if (sect[a] < 0 || sect[a] >= ng) throw input_error("section index out of range");
    if (proj[sect[a]] != a) throw input_error("p o s != id");
  }
}

ObstructionResult obstruction_class(const FiniteQuandle& x, const Cochain& eta,
                                    const ModuleExactSequence& seq) {
  seq.validate();
  if (!(eta.coeff == seq.a_mod))
    throw input_error("eta must take values in the quotient module A");
  if (!is_quandle_hom_to_module(x, eta))
    throw input_error("eta is not a quandle homomorphism into A");

  const CoefficientModule& g = seq.g_mod;
  const CoefficientModule& nm = seq.n_mod;
  std::map<long long, long long> i_inverse;
  for (long long i = 0; i < nm.size(); ++i) i_inverse[seq.incl[i]] = i;

  auto lift = [&](int xi) {
    return g.from_index(seq.sect[seq.a_mod.to_index(eta.eval({xi}))]);
  };

  Cochain phi;
  phi.level = 2;
  phi.quandle_size = x.size();
  phi.quandle_label = x.label();
  phi.coeff = nm;
  phi.twisted = true;
  for (int x1 = 0; x1 < x.size(); ++x1)
    for (int x2 = 0; x2 < x.size(); ++x2) {
      // T s.eta(x1) + s.eta(x2) - [T s.eta(x2) + s.eta(x1*x2)] = i phi(x1,x2)
      auto u = g.sub(g.add(g.t_act(lift(x1)), lift(x2)),
                     g.add(g.t_act(lift(x2)), lift(x.op(x1, x2))));
      auto it = i_inverse.find(g.to_index(u));
      if (it == i_inverse.end())
        throw std::logic_error("obstruction value escaped the image of N");
      phi.set({x1, x2}, nm.from_index(it->second));
    }

  CocycleCheck chk = is_cocycle(x, phi, Theory::quandle, true);
  if (!chk.ok) throw std::logic_error("obstruction is not a twisted 2-cocycle: " + chk.detail);

  ObstructionResult res{phi, false, std::nullopt};
  auto psi = is_coboundary(x, phi, Theory::quandle);
  if (psi) {
    res.extends = true;
    Cochain ext;
    ext.level = 1;
    ext.quandle_size = x.size();
    ext.quandle_label = x.label();
    ext.coeff = g;
    ext.twisted = true;
    for (int xi = 0; xi < x.size(); ++xi) {
      auto v = g.sub(lift(xi), g.from_index(seq.incl[nm.to_index(psi->eval({xi}))]));
      ext.set({xi}, v);
    }
    res.extension = ext;
  }
  return res;
}

}  // namespace qw
