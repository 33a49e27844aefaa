#include "qw/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qw/homology.hpp"

namespace qw {

std::string AxiomReport::describe() const {
  if (pass()) return "quandle axioms hold";
  std::ostringstream os;
  if (!idempotent)
    os << "axiom I fails: " << witness[0] << "*" << witness[0] << " != " << witness[0];
  else if (!right_invertible)
    os << "axiom II fails: a -> a*" << witness[1] << " is not a bijection (collision at a="
       << witness[0] << ")";
  else
    os << "axiom III fails at (a,b,c) = (" << witness[0] << "," << witness[1] << ","
       << witness[2] << ")";
  return os.str();
}

AxiomReport verify_axioms(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw input_error("empty operation table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw input_error("operation table is not square");
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw input_error("operation table entry out of range at (" + std::to_string(a) +
                          "," + std::to_string(b) + ")");
  }
  AxiomReport r;
  for (int a = 0; a < n; ++a)
    if (table[a][a] != a) {
      r.idempotent = false;
      r.witness = {a, -1, -1};
      return r;
    }
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      int v = table[a][b];
      if (seen[v]) {
        r.right_invertible = false;
        r.witness = {a, b, -1};
        return r;
      }
      seen[v] = 1;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[table[a][c]][table[b][c]]) {
          r.distributive = false;
          r.witness = {a, b, c};
          return r;
        }
  return r;
}

FiniteQuandle::FiniteQuandle(std::string label, std::vector<std::vector<int>> table)
    : n_(static_cast<int>(table.size())), label_(std::move(label)), table_(std::move(table)) {
  AxiomReport r = verify_axioms(table_);
  if (!r.pass())
    throw input_error("not a quandle (" + label_ + "): " + r.describe());
  inv_.assign(n_, std::vector<int>(n_, -1));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) inv_[table_[a][b]][b] = a;
}

FiniteQuandle make_trivial(int n) {
  if (n < 1) throw input_error("trivial quandle needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = a;
  return FiniteQuandle("T" + std::to_string(n), std::move(t));
}

FiniteQuandle make_dihedral(int n) {
  if (n < 1) throw input_error("dihedral quandle needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = mod_norm(2LL * b - a, n);
  return FiniteQuandle("R" + std::to_string(n), std::move(t));
}

FiniteQuandle make_alexander(long q, const std::vector<long>& h) {
  CoefficientModule m = CoefficientModule::alexander(q, h);
  long long n = m.size();
  if (n > 4096) throw size_error("Alexander quandle too large to tabulate: " + std::to_string(n));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (long long a = 0; a < n; ++a) {
    auto ea = m.from_index(a);
    for (long long b = 0; b < n; ++b)
      t[a][b] = static_cast<int>(m.to_index(m.star(ea, m.from_index(b))));
  }
  return FiniteQuandle(m.describe(), std::move(t));
}

namespace {

int group_identity(const std::vector<std::vector<int>>& mult) {
  int n = static_cast<int>(mult.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = (mult[e][x] == x && mult[x][e] == x);
    if (ok) return e;
  }
  throw input_error("multiplication table has no identity element");
}

int group_inverse(const std::vector<std::vector<int>>& mult, int e, int g) {
  int n = static_cast<int>(mult.size());
  for (int x = 0; x < n; ++x)
    if (mult[g][x] == e) return x;
  throw input_error("multiplication table has no inverse for element " + std::to_string(g));
}

int group_power(const std::vector<std::vector<int>>& mult, int e, int g, int k) {
  int acc = e;
  for (int i = 0; i < k; ++i) acc = mult[acc][g];
  return acc;
}

}  // namespace

FiniteQuandle make_conjugation(const std::vector<std::vector<int>>& group_mult,
                               const std::vector<int>& subset, int exponent,
                               const std::string& label) {
  int n = static_cast<int>(group_mult.size());
  for (const auto& row : group_mult) {
    if (static_cast<int>(row.size()) != n) throw input_error("multiplication table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw input_error("multiplication table entry out of range");
  }
  int e = group_identity(group_mult);
  int m = static_cast<int>(subset.size());
  if (m == 0) throw input_error("empty conjugation subset");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < m; ++i) {
    if (subset[i] < 0 || subset[i] >= n) throw input_error("subset element out of range");
    pos[subset[i]] = i;
  }
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int b = subset[j];
      int bn = exponent >= 0 ? group_power(group_mult, e, b, exponent)
                             : group_power(group_mult, e, group_inverse(group_mult, e, b), -exponent);
      int bninv = group_inverse(group_mult, e, bn);
      int v = group_mult[group_mult[bninv][subset[i]]][bn];
      if (pos[v] < 0)
        throw input_error("subset not closed under conjugation: " + std::to_string(subset[i]) +
                          " * " + std::to_string(b) + " = " + std::to_string(v));
      t[i][j] = pos[v];
    }
  return FiniteQuandle(label, std::move(t));
}

FiniteQuandle make_qs6() {
  // the symmetric group on four letters, elements enumerated lexicographically
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 4>& x) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), x) - perms.begin());
  };
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 4> comp;
      for (int x = 0; x < 4; ++x) comp[x] = perms[i][perms[j][x]];
      mult[i][j] = index_of(comp);
    }
  // 4-cycles a=(1234), A=(1432), b=(1243), B=(1342), c=(1324), C=(1423)
  std::vector<std::array<int, 4>> cycles = {
      {1, 2, 3, 0}, {3, 0, 1, 2}, {1, 3, 0, 2}, {2, 0, 3, 1}, {2, 3, 1, 0}, {3, 2, 0, 1}};
  std::vector<int> subset;
  for (const auto& c : cycles) subset.push_back(index_of(c));
  return make_conjugation(mult, subset, 1, "QS6");
}

std::optional<std::array<int, 2>> hom_violation(const FiniteQuandle& src,
                                                const FiniteQuandle& dst,
                                                const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != src.size())
    throw input_error("homomorphism value list has wrong length");
  for (int v : values)
    if (v < 0 || v >= dst.size()) throw input_error("homomorphism value out of range");
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (values[src.op(a, b)] != dst.op(values[a], values[b]))
        return std::array<int, 2>{a, b};
  return std::nullopt;
}

bool is_quandle_hom(const FiniteQuandle& src, const FiniteQuandle& dst,
                    const std::vector<int>& values) {
  return !hom_violation(src, dst, values).has_value();
}

namespace {

// per-element profile used to prune the isomorphism search
std::vector<std::vector<int>> element_profiles(const FiniteQuandle& q) {
  int n = q.size();
  std::vector<std::vector<int>> prof(n);
  for (int x = 0; x < n; ++x) {
    // cycle type of the right translation a -> a*x
    std::vector<int> type;
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      if (seen[a]) continue;
      int len = 0, b = a;
      while (!seen[b]) {
        seen[b] = 1;
        b = q.op(b, x);
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    int fix_left = 0;  // how many b satisfy x*b = x
    for (int b = 0; b < n; ++b)
      if (q.op(x, b) == x) ++fix_left;
    type.push_back(fix_left);
    prof[x] = type;
  }
  return prof;
}

struct IsoSearch {
  const FiniteQuandle& a;
  const FiniteQuandle& b;
  std::vector<std::vector<int>> pa, pb;
  std::vector<int> f;         // a-index -> b-index or -1
  std::vector<char> used;     // b-index taken
  std::vector<int> trail;     // assigned a-indices, for undo

  bool assign(int x, int y) {
    size_t mark = trail.size();
    if (!push(x, y)) {
      undo(mark);
      return false;
    }
    // closure: every pair of assigned elements forces the image of products
    for (size_t i = mark; i < trail.size(); ++i) {
      int u = trail[i];
      for (int v = 0; v < a.size(); ++v) {
        if (f[v] < 0) continue;
        if (!force(a.op(u, v), b.op(f[u], f[v])) || !force(a.op(v, u), b.op(f[v], f[u]))) {
          undo(mark);
          return false;
        }
      }
    }
    int x2 = next_free();
    if (x2 < 0) return true;  // complete and consistent
    for (int y2 = 0; y2 < b.size(); ++y2) {
      if (used[y2] || pa[x2] != pb[y2]) continue;
      if (assign(x2, y2)) return true;
    }
    undo(mark);
    return false;
  }

  bool push(int x, int y) {
    if (f[x] >= 0) return f[x] == y;
    if (used[y] || pa[x] != pb[y]) return false;
    f[x] = y;
    used[y] = 1;
    trail.push_back(x);
    return true;
  }

  bool force(int x, int y) { return push(x, y); }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      used[f[x]] = 0;
      f[x] = -1;
    }
  }

  int next_free() const {
    for (int x = 0; x < a.size(); ++x)
      if (f[x] < 0) return x;
    return -1;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& a,
                                                 const FiniteQuandle& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s{a, b, element_profiles(a), element_profiles(b),
              std::vector<int>(a.size(), -1), std::vector<char>(b.size(), 0), {}};
  {
    auto sa = s.pa, sb = s.pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  int x0 = 0;
  for (int y = 0; y < b.size(); ++y) {
    if (s.pa[x0] != s.pb[y]) continue;
    if (s.assign(x0, y)) return s.f;
  }
  return std::nullopt;
}

FiniteQuandle alexander_extension(const FiniteQuandle& x, const CoefficientModule& a,
                                  const Cochain& phi) {
  if (phi.level != 2 || phi.quandle_size != x.size() || !(phi.coeff == a))
    throw input_error("extension cocycle does not match base quandle and fiber");
  CocycleCheck chk = is_cocycle(x, phi, Theory::quandle, /*twisted=*/true);
  if (!chk.ok)
    throw input_error("not a twisted 2-cocycle: " + chk.detail);
  int nx = x.size();
  long long na = a.size();
  long long n = na * nx;
  if (n > 4096) throw size_error("extension too large to tabulate");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (long long i1 = 0; i1 < n; ++i1) {
    auto a1 = a.from_index(i1 / nx);
    int x1 = static_cast<int>(i1 % nx);
    for (long long i2 = 0; i2 < n; ++i2) {
      auto a2 = a.from_index(i2 / nx);
      int x2 = static_cast<int>(i2 % nx);
      auto av = a.add(a.star(a1, a2), phi.eval({x1, x2}));
      t[i1][i2] = static_cast<int>(a.to_index(av) * nx + x.op(x1, x2));
    }
  }
  return FiniteQuandle("AE(" + x.label() + "," + a.describe() + ")", std::move(t));
}

FiniteQuandle abelian_extension(const FiniteQuandle& x, long q, const Cochain& phi) {
  CoefficientModule a = CoefficientModule::plain(q);
  if (phi.level != 2 || phi.quandle_size != x.size() || !(phi.coeff == a))
    throw input_error("extension cocycle does not match base quandle and fiber");
  CocycleCheck chk = is_cocycle(x, phi, Theory::quandle, /*twisted=*/false);
  if (!chk.ok)
    throw input_error("not a 2-cocycle: " + chk.detail);
  int nx = x.size();
  long long n = q * static_cast<long long>(nx);
  if (n > 4096) throw size_error("extension too large to tabulate");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (long long i1 = 0; i1 < n; ++i1) {
    long a1 = static_cast<long>(i1 / nx);
    int x1 = static_cast<int>(i1 % nx);
    for (long long i2 = 0; i2 < n; ++i2) {
      int x2 = static_cast<int>(i2 % nx);
      long av = mod_norm(a1 + phi.eval({x1, x2})[0], q);
      t[i1][i2] = static_cast<int>(av * nx + x.op(x1, x2));
    }
  }
  return FiniteQuandle("E(" + x.label() + ",Z_" + std::to_string(q) + ")", std::move(t));
}

ExtensionCocycle extension_cocycle(long p, int m, const std::vector<long>& h) {
  if (p < 2 || m < 2) throw input_error("extension cocycle needs p >= 2 and m >= 2");
  long long qtop = 1, qmid = 1;
  for (int i = 0; i < m; ++i) qtop *= p;
  for (int i = 0; i < m - 1; ++i) qmid *= p;
  if (qtop > 100000) throw size_error("p^m too large");

  CoefficientModule top = CoefficientModule::alexander(qtop, h);
  const std::vector<long>& hm = top.modulus_poly();  // monic over Z_{p^m}
  std::vector<long> hbar(hm.size()), htilde(hm.size());
  for (size_t i = 0; i < hm.size(); ++i) {
    hbar[i] = mod_norm(hm[i], qmid);
    htilde[i] = mod_norm(hm[i], p);
  }
  FiniteQuandle base = make_alexander(qmid, hbar);
  CoefficientModule mid = CoefficientModule::alexander(qmid, hbar);
  CoefficientModule fiber = CoefficientModule::alexander(p, htilde);

  Cochain phi;
  phi.level = 2;
  phi.quandle_size = base.size();
  phi.quandle_label = base.label();
  phi.coeff = fiber;
  phi.twisted = true;
  int d = top.dim();
  for (long long i1 = 0; i1 < mid.size(); ++i1) {
    auto x1 = mid.from_index(i1);
    std::vector<long> s1(x1.begin(), x1.end());  // section: same digits, top digit 0
    for (long long i2 = 0; i2 < mid.size(); ++i2) {
      auto x2 = mid.from_index(i2);
      std::vector<long> s2(x2.begin(), x2.end());
      auto e = top.star(s1, s2);
      std::vector<long> carry(d);
      for (int i = 0; i < d; ++i) carry[i] = static_cast<long>(e[i] / qmid);
      phi.set({static_cast<int>(i1), static_cast<int>(i2)}, carry);
    }
  }

  FiniteQuandle total = make_alexander(qtop, hm);
  CocycleCheck chk = is_cocycle(base, phi, Theory::quandle, /*twisted=*/true);
  if (!chk.ok)
    throw std::logic_error("extension cocycle failed the cocycle condition: " + chk.detail);
  return ExtensionCocycle{std::move(base), std::move(fiber), std::move(phi), std::move(total)};
}

std::map<int, long> extension_cocycle_eval(long p, int m,
                                           const std::map<int, long>& lbar,
                                           const std::map<int, long>& mbar) {
  if (p < 2 || m < 2) throw input_error("extension cocycle needs p >= 2 and m >= 2");
  long long qtop = 1, qmid = 1;
  for (int i = 0; i < m; ++i) qtop *= p;
  for (int i = 0; i < m - 1; ++i) qmid *= p;
  auto norm_in = [&](const std::map<int, long>& f) {
    std::map<int, long long> g;
    for (auto [e, c] : f) g[e] = mod_norm(c, qmid);
    return g;
  };
  std::map<int, long long> l = norm_in(lbar), mm = norm_in(mbar);
  // T l + (1-T) m over Z_{p^m}, no polynomial reduction
  std::map<int, long long> res;
  for (auto [e, c] : l) res[e + 1] += c;
  for (auto [e, c] : mm) {
    res[e] += c;
    res[e + 1] -= c;
  }
  std::map<int, long> carry;
  for (auto [e, c] : res) {
    long v = mod_norm(c, qtop);
    long top = static_cast<long>(v / qmid);
    if (top != 0) carry[e] = top;
  }
  return carry;
}

}  // namespace qw
