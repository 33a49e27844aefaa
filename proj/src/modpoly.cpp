#include "qw/modpoly.hpp"

#include <numeric>
#include <sstream>

namespace qw {

long mod_norm(long long v, long q) {
  long long r = v % q;
  if (r < 0) r += q;
  return static_cast<long>(r);
}

long mod_inv(long a, long q) {
  // extended Euclid
  long r0 = q, r1 = mod_norm(a, q);
  long s0 = 0, s1 = 1;
  while (r1 != 0) {
    long qt = r0 / r1;
    long r2 = r0 - qt * r1;
    long s2 = s0 - qt * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1)
    throw input_error("not a unit mod " + std::to_string(q) + ": " + std::to_string(a));
  return mod_norm(s0, q);
}

CoefficientModule CoefficientModule::plain(long q) {
  if (q < 2) throw input_error("modulus must be >= 2");
  CoefficientModule m;
  m.q_ = q;
  m.h_ = {mod_norm(-1, q), 1};  // T - 1
  m.tinv_ = {1};
  m.plain_ = true;
  return m;
}

CoefficientModule CoefficientModule::alexander(long q, std::vector<long> h) {
  if (q < 2) throw input_error("modulus must be >= 2");
  while (!h.empty() && h.back() == 0) h.pop_back();
  if (h.size() < 2)
    throw input_error("modulus polynomial must have degree >= 1");
  for (long& c : h) c = mod_norm(c, q);
  if (h[0] == 0 || h.back() == 0)
    throw input_error("modulus polynomial needs unit leading and constant coefficients");
  // monic normalization; mod_inv rejects non-unit leading coefficients
  long lead_inv = mod_inv(h.back(), q);
  for (long& c : h) c = mod_norm(static_cast<long long>(c) * lead_inv, q);
  mod_inv(h[0], q);  // constant term must be a unit too

  CoefficientModule m;
  m.q_ = q;
  m.h_ = h;
  int d = m.dim();
  // T^{-1} = -h0^{-1} (h - h0)/T  (from h(T) = 0, h monic)
  long c0inv = mod_inv(h[0], q);
  std::vector<long> tinv(d, 0);
  for (int i = 1; i <= d; ++i)
    tinv[i - 1] = mod_norm(-static_cast<long long>(c0inv) * h[i], q);
  m.tinv_ = tinv;
  m.plain_ = (d == 1 && h[0] == mod_norm(-1, q));
  return m;
}

long long CoefficientModule::size() const {
  long long s = 1;
  for (int i = 0; i < dim(); ++i) s *= q_;
  return s;
}

bool CoefficientModule::is_zero(const Elem& a) const {
  for (long c : a)
    if (c != 0) return false;
  return true;
}

CoefficientModule::Elem CoefficientModule::add(const Elem& a, const Elem& b) const {
  Elem r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = mod_norm(static_cast<long long>(a[i]) + b[i], q_);
  return r;
}

CoefficientModule::Elem CoefficientModule::sub(const Elem& a, const Elem& b) const {
  Elem r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = mod_norm(static_cast<long long>(a[i]) - b[i], q_);
  return r;
}

CoefficientModule::Elem CoefficientModule::neg(const Elem& a) const {
  Elem r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = mod_norm(-static_cast<long long>(a[i]), q_);
  return r;
}

CoefficientModule::Elem CoefficientModule::scal(long k, const Elem& a) const {
  Elem r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = mod_norm(static_cast<long long>(k) * a[i], q_);
  return r;
}

CoefficientModule::Elem CoefficientModule::reduce(std::vector<long> raw) const {
  int d = dim();
  // fold T^k, k >= d, using T^d = -(h_0 + ... + h_{d-1} T^{d-1})
  for (int k = static_cast<int>(raw.size()) - 1; k >= d; --k) {
    long c = mod_norm(raw[k], q_);
    raw[k] = 0;
    if (c == 0) continue;
    for (int i = 0; i < d; ++i)
      raw[k - d + i] = mod_norm(raw[k - d + i] - static_cast<long long>(c) * h_[i], q_);
  }
  raw.resize(d);
  for (long& c : raw) c = mod_norm(c, q_);
  return raw;
}

CoefficientModule::Elem CoefficientModule::mul(const Elem& a, const Elem& b) const {
  int d = dim();
  std::vector<long> raw(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      raw[i + j] = mod_norm(raw[i + j] + static_cast<long long>(a[i]) * b[j], q_);
  }
  return reduce(std::move(raw));
}

CoefficientModule::Elem CoefficientModule::t_act(const Elem& a) const {
  std::vector<long> raw(dim() + 1, 0);
  for (int i = 0; i < dim(); ++i) raw[i + 1] = a[i];
  return reduce(std::move(raw));
}

CoefficientModule::Elem CoefficientModule::t_pow(const Elem& a, long e) const {
  Elem r = a;
  if (e >= 0) {
    for (long k = 0; k < e; ++k) r = t_act(r);
  } else {
    for (long k = 0; k < -e; ++k) r = mul(r, tinv_);
  }
  return r;
}

CoefficientModule::Elem CoefficientModule::star(const Elem& a, const Elem& b) const {
  // Ta + (1-T)b
  return add(t_act(sub(a, b)), b);
}

long long CoefficientModule::to_index(const Elem& a) const {
  long long idx = 0;
  for (int i = dim() - 1; i >= 0; --i) idx = idx * q_ + a[i];
  return idx;
}

CoefficientModule::Elem CoefficientModule::from_index(long long idx) const {
  Elem a(dim());
  for (int i = 0; i < dim(); ++i) {
    a[i] = static_cast<long>(idx % q_);
    idx /= q_;
  }
  return a;
}

std::string show_poly(const std::vector<long>& coeffs, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    long c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << "+";
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string CoefficientModule::show(const Elem& a) const { return show_poly(a); }

std::string CoefficientModule::describe() const {
  if (plain_) return "Z_" + std::to_string(q_);
  return "Z_" + std::to_string(q_) + "[T]/(" + show_poly(h_) + ")";
}

std::vector<std::vector<long>> CoefficientModule::t_matrix(long e) const {
  int d = dim();
  std::vector<std::vector<long>> m(d, std::vector<long>(d, 0));
  for (int j = 0; j < d; ++j) {
    Elem basis(d, 0);
    basis[j] = 1;
    Elem img = t_pow(basis, e);
    for (int i = 0; i < d; ++i) m[i][j] = img[i];
  }
  return m;
}

}  // namespace qw
