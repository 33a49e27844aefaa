#include "qw/snf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qw {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::hcat(const IntMat& o) const {
  IntMat r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& x) const {
  std::vector<Int> y(rows_);
  for (int i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) acc += at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row_i += f * row_j
void add_row(IntMat& m, int i, int j, const Int& f) {
  if (f == 0) return;
  for (int c = 0; c < m.cols(); ++c)
    if (m.at(j, c) != 0) m.at(i, c) += f * m.at(j, c);
}

void add_col(IntMat& m, int i, int j, const Int& f) {
  if (f == 0) return;
  for (int r = 0; r < m.rows(); ++r)
    if (m.at(r, j) != 0) m.at(r, i) += f * m.at(r, j);
}

void negate_row(IntMat& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SnfResult smith_normal_form(const IntMat& a, bool with_transforms) {
  SnfResult res;
  res.d = a;
  if (with_transforms) {
    res.u = IntMat::identity(a.rows());
    res.v = IntMat::identity(a.cols());
  } else {
    res.u = IntMat(0, 0);
    res.v = IntMat(0, 0);
  }
  IntMat& d = res.d;
  IntMat& u = res.u;
  IntMat& v = res.v;
  auto u_swap = [&](int i, int j) { if (with_transforms) swap_rows(u, i, j); };
  auto v_swap = [&](int i, int j) { if (with_transforms) swap_cols(v, i, j); };
  auto u_add = [&](int i, int j, const Int& f) { if (with_transforms) add_row(u, i, j, f); };
  auto v_add = [&](int i, int j, const Int& f) { if (with_transforms) add_col(v, i, j, f); };
  auto u_neg = [&](int i) { if (with_transforms) negate_row(u, i); };

  int n = std::min(a.rows(), a.cols());
  int k = 0;
  for (; k < n; ++k) {
    // pivot: smallest nonzero absolute value in the trailing submatrix
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = k; i < a.rows(); ++i)
      for (int j = k; j < a.cols(); ++j) {
        if (d.at(i, j) == 0) continue;
        Int av = abs(d.at(i, j));
        if (pr < 0 || av < best) {
          best = av;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // submatrix is zero
    swap_rows(d, k, pr);
    u_swap(k, pr);
    swap_cols(d, k, pc);
    v_swap(k, pc);

    for (;;) {
      bool clean = true;
      // clear column k
      for (int i = k + 1; i < a.rows(); ++i) {
        if (d.at(i, k) == 0) continue;
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), d.at(i, k).get_mpz_t(), d.at(k, k).get_mpz_t());
        add_row(d, i, k, -f);
        u_add(i, k, -f);
        if (d.at(i, k) != 0) {
          // remainder smaller than pivot: swap it in and restart
          swap_rows(d, k, i);
          u_swap(k, i);
          clean = false;
        }
      }
      if (!clean) continue;
      // clear row k
      for (int j = k + 1; j < a.cols(); ++j) {
        if (d.at(k, j) == 0) continue;
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), d.at(k, j).get_mpz_t(), d.at(k, k).get_mpz_t());
        add_col(d, j, k, -f);
        v_add(j, k, -f);
        if (d.at(k, j) != 0) {
          swap_cols(d, k, j);
          v_swap(k, j);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      // pivot must divide every entry of the trailing submatrix
      bool divides = true;
      for (int i = k + 1; i < a.rows() && divides; ++i)
        for (int j = k + 1; j < a.cols() && divides; ++j) {
          if (d.at(i, j) == 0) continue;
          if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(k, k).get_mpz_t())) {
            add_row(d, k, i, 1);
            u_add(k, i, 1);
            divides = false;
          }
        }
      if (divides) break;
    }
    if (d.at(k, k) < 0) {
      negate_row(d, k);
      u_neg(k);
    }
  }
  res.rank = k;
  return res;
}

std::vector<Int> SnfResult::divisors() const {
  std::vector<Int> out;
  for (int i = 0; i < rank; ++i) out.push_back(d.at(i, i));
  return out;
}

int rank_of(const IntMat& a) { return smith_normal_form(a, false).rank; }

IntMat kernel_basis(const IntMat& a) {
  SnfResult s = smith_normal_form(a);
  int free = a.cols() - s.rank;
  IntMat k(a.cols(), free);
  for (int j = 0; j < free; ++j)
    for (int i = 0; i < a.cols(); ++i) k.at(i, j) = s.v.at(i, s.rank + j);
  return k;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
  SnfResult s = smith_normal_form(a);
  std::vector<Int> ub = s.u.apply(b);
  std::vector<Int> y(a.cols(), Int(0));
  for (int i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.d.at(i, i).get_mpz_t()))
        return std::nullopt;
      y[i] = ub[i] / s.d.at(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

Int AbelianGroupDescriptor::torsion_order() const {
  Int t = 1;
  for (const Int& d : torsion) t *= d;
  return t;
}

std::string AbelianGroupDescriptor::show() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z_" << d.get_str();
    first = false;
  }
  return os.str();
}

AbelianGroupDescriptor quotient_group(const IntMat& lattice_basis, const IntMat& sub) {
  // express the columns of sub in the lattice basis
  IntMat w(lattice_basis.cols(), sub.cols());
  for (int j = 0; j < sub.cols(); ++j) {
    std::vector<Int> b(sub.rows());
    for (int i = 0; i < sub.rows(); ++i) b[i] = sub.at(i, j);
    auto x = solve_integer(lattice_basis, b);
    if (!x) throw std::logic_error("quotient_group: subgroup not contained in lattice");
    for (int i = 0; i < lattice_basis.cols(); ++i) w.at(i, j) = (*x)[i];
  }
  SnfResult s = smith_normal_form(w);
  AbelianGroupDescriptor g;
  g.free_rank = lattice_basis.cols() - s.rank;
  for (const Int& d : s.divisors())
    if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace qw
