#include "qw/zqlin.hpp"

#include <algorithm>
#include <numeric>

#include "qw/modpoly.hpp"

namespace qw {

namespace {

long long xgcd(long long a, long long b, long long& s, long long& t) {
  long long r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long quot = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, r0 - quot * r1);
    std::tie(s0, s1) = std::make_tuple(s1, s0 - quot * s1);
    std::tie(t0, t1) = std::make_tuple(t1, t0 - quot * t1);
  }
  s = s0;
  t = t0;
  return r0;
}

// unit u mod q with u * g = gcd(g, q) (g nonzero mod q)
long unit_normalizer(long g, long q) {
  long gq = std::gcd(g, q);
  long gp = g / gq;  // coprime to q/gq
  long qq = q / gq;
  if (qq == 1) {
    // g generates the same ideal as gq = g; any unit works
    return 1;
  }
  // lift the inverse of gp mod qq to a unit mod q
  long u0 = mod_inv(gp % qq, qq);
  for (long k = 0; k < gq; ++k) {
    long cand = u0 + k * qq;
    long long s, t;
    if (cand != 0 && xgcd(cand, q, s, t) == 1 &&
        mod_norm(static_cast<long long>(cand) * g, q) == gq)
      return cand;
  }
  for (long u2 = 1; u2 < q; ++u2) {  // unreachable fallback
    long long s, t;
    if (xgcd(u2, q, s, t) != 1) continue;
    if (mod_norm(static_cast<long long>(u2) * g, q) == gq) return u2;
  }
  throw std::logic_error("no unit normalizer found");
}

struct EchelonColumn {
  std::vector<long> a;  // image column, mod q
  std::vector<long> v;  // tracker, mod q
};

struct Echelon {
  long q;
  int m, n;
  std::vector<EchelonColumn> pivots;  // echelon order
  std::vector<int> pivot_row;
  std::vector<EchelonColumn> kernel;  // columns with zero image

  bool col_zero(const std::vector<long>& c) const {
    for (long v : c)
      if (v != 0) return false;
    return true;
  }
};

Echelon column_echelon(const IntMat& a, long q) {
  Echelon ech;
  ech.q = q;
  ech.m = a.rows();
  ech.n = a.cols();
  std::vector<EchelonColumn> active;
  for (int j = 0; j < a.cols(); ++j) {
    EchelonColumn col;
    col.a.resize(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
      Int r = a.at(i, j) % q;
      if (r < 0) r += q;
      col.a[i] = static_cast<long>(r.get_si());
    }
    col.v.assign(a.cols(), 0);
    col.v[j] = 1;
    active.push_back(std::move(col));
  }

  auto combine = [&](EchelonColumn& x, EchelonColumn& y, int row) {
    // unimodular 2x2 transform putting gcd into x and zero into y at this row
    long long s, t;
    long long av = x.a[row], bv = y.a[row];
    long long g = xgcd(av, bv, s, t);
    long long p = av / g, r = bv / g;
    for (size_t i = 0; i < x.a.size(); ++i) {
      long long xa = x.a[i], ya = y.a[i];
      x.a[i] = mod_norm(s * xa + t * ya, q);
      y.a[i] = mod_norm(-r * xa + p * ya, q);
    }
    for (size_t i = 0; i < x.v.size(); ++i) {
      long long xv = x.v[i], yv = y.v[i];
      x.v[i] = mod_norm(s * xv + t * yv, q);
      y.v[i] = mod_norm(-r * xv + p * yv, q);
    }
  };

  for (int row = 0; row < a.rows(); ++row) {
    int p = -1;
    for (size_t j = 0; j < active.size(); ++j)
      if (active[j].a[row] != 0) {
        if (p < 0) {
          p = static_cast<int>(j);
        } else {
          combine(active[p], active[j], row);
        }
      }
    if (p < 0) continue;
    EchelonColumn piv = std::move(active[p]);
    active.erase(active.begin() + p);
    // normalize the pivot to gcd(pivot, q) by a unit
    long u = unit_normalizer(piv.a[row], q);
    if (u != 1) {
      for (long& x : piv.a) x = mod_norm(static_cast<long long>(u) * x, q);
      for (long& x : piv.v) x = mod_norm(static_cast<long long>(u) * x, q);
    }
    long g = piv.a[row];
    long ann = q / std::gcd(g, q);
    if (ann != 1 && ann != q) {
      EchelonColumn extra;
      extra.a.resize(piv.a.size());
      extra.v.resize(piv.v.size());
      for (size_t i = 0; i < piv.a.size(); ++i)
        extra.a[i] = mod_norm(static_cast<long long>(ann) * piv.a[i], q);
      for (size_t i = 0; i < piv.v.size(); ++i)
        extra.v[i] = mod_norm(static_cast<long long>(ann) * piv.v[i], q);
      active.push_back(std::move(extra));
    }
    ech.pivot_row.push_back(row);
    ech.pivots.push_back(std::move(piv));
  }
  for (auto& col : active) {
    if (!ech.col_zero(col.a))
      throw std::logic_error("column echelon left a nonzero column");
    if (!ech.col_zero(col.v)) ech.kernel.push_back(std::move(col));
  }
  return ech;
}

}  // namespace

std::vector<std::vector<long>> kernel_mod(const IntMat& a, long q) {
  Echelon ech = column_echelon(a, q);
  std::vector<std::vector<long>> out;
  for (const auto& col : ech.kernel) out.push_back(col.v);
  return out;
}

std::optional<std::vector<long>> solve_mod(const IntMat& a, const std::vector<long>& b,
                                           long q) {
  Echelon ech = column_echelon(a, q);
  std::vector<long> rest(b.size());
  for (size_t i = 0; i < b.size(); ++i) rest[i] = mod_norm(b[i], q);
  std::vector<long> x(a.cols(), 0);
  for (size_t k = 0; k < ech.pivots.size(); ++k) {
    int row = ech.pivot_row[k];
    long g = ech.pivots[k].a[row];
    long r = rest[row];
    if (r == 0) continue;
    long gq = std::gcd(g, q);
    if (r % gq != 0) return std::nullopt;
    // c * g = r (mod q); g = gq * unit after normalization
    long c = mod_norm(static_cast<long long>(r / gq) * mod_inv(g / gq, q / gq), q / gq);
    for (size_t i = 0; i < rest.size(); ++i)
      rest[i] = mod_norm(rest[i] - static_cast<long long>(c) * ech.pivots[k].a[i], q);
    for (size_t i = 0; i < x.size(); ++i)
      x[i] = mod_norm(x[i] + static_cast<long long>(c) * ech.pivots[k].v[i], q);
  }
  for (long v : rest)
    if (v != 0) return std::nullopt;
  return x;
}

IntMat hnf_columns_modq(const IntMat& a, long q) {
  // append q e_i, run the plain column Hermite reduction with opportunistic
  // mod-q reduction (legal because qZ^n lies in the span)
  int n = a.rows();
  IntMat full(n, a.cols() + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      Int r = a.at(i, j) % q;
      if (r < 0) r += q;
      full.at(i, j) = r;
    }
    full.at(i, a.cols() + i) = q;
  }
  // column echelon over Z with mod-q entry reduction
  int r = 0;
  for (int row = 0; row < n && r < full.cols(); ++row) {
    for (;;) {
      int p = -1;
      Int best = 0;
      for (int j = r; j < full.cols(); ++j) {
        if (full.at(row, j) == 0) continue;
        Int av = abs(full.at(row, j));
        if (p < 0 || av < best) {
          best = av;
          p = j;
        }
      }
      if (p < 0) break;
      for (int i = 0; i < n; ++i) std::swap(full.at(i, r), full.at(i, p));
      bool done = true;
      for (int j = r + 1; j < full.cols(); ++j) {
        if (full.at(row, j) == 0) continue;
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), full.at(row, j).get_mpz_t(), full.at(row, r).get_mpz_t());
        if (f != 0)
          for (int i = 0; i < n; ++i) {
            full.at(i, j) -= f * full.at(i, r);
            Int rr = full.at(i, j) % q;
            if (rr < 0) rr += q;
            full.at(i, j) = rr;
          }
        if (full.at(row, j) != 0) done = false;
      }
      if (done) break;
    }
    if (full.at(row, r) == 0) continue;
    // reduce earlier columns on this row
    for (int j = 0; j < r; ++j) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), full.at(row, j).get_mpz_t(), full.at(row, r).get_mpz_t());
      if (f != 0)
        for (int i = 0; i < n; ++i) {
          full.at(i, j) -= f * full.at(i, r);
          if (i > row) {
            Int rr = full.at(i, j) % q;
            if (rr < 0) rr += q;
            full.at(i, j) = rr;
          }
        }
    }
    ++r;
  }
  IntMat out(n, r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) out.at(i, j) = full.at(i, j);
  return out;
}

Int span_size_mod(const IntMat& a, long q) {
  IntMat h = hnf_columns_modq(a, q);
  // the span with qZ^n has index prod(diagonal) in Z^n
  Int idx = 1;
  int col = 0;
  for (int row = 0; row < h.rows() && col < h.cols(); ++row)
    if (h.at(row, col) != 0) {
      idx *= h.at(row, col);
      ++col;
    }
  Int qn = 1;
  for (int i = 0; i < h.rows(); ++i) qn *= q;
  return qn / idx;
}

}  // namespace qw
