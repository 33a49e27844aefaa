#include "qw/laurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qw {

LaurentPoly LaurentPoly::mono(int exp, long long k) {
  LaurentPoly p;
  if (k != 0) p.c[exp] = k;
  return p;
}

void LaurentPoly::add_term(int exp, long long k) {
  if (k == 0) return;
  auto it = c.find(exp);
  if (it == c.end()) {
    c[exp] = k;
  } else {
    it->second += k;
    if (it->second == 0) c.erase(it);
  }
}

LaurentPoly LaurentPoly::plus(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, k] : o.c) r.add_term(e, k);
  return r;
}

LaurentPoly LaurentPoly::minus(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, k] : o.c) r.add_term(e, -k);
  return r;
}

LaurentPoly LaurentPoly::times(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e1, k1] : c)
    for (auto [e2, k2] : o.c) r.add_term(e1 + e2, k1 * k2);
  return r;
}

LaurentPoly LaurentPoly::scaled(long long k) const {
  LaurentPoly r;
  for (auto [e, v] : c) r.add_term(e, v * k);
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  LaurentPoly r = mono(0, 1);
  for (int i = 0; i < n; ++i) r = r.times(*this);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int e, int sign) const {
  LaurentPoly r;
  for (auto [exp, k] : c) {
    long long s = (sign < 0 && (exp % 2 != 0)) ? -k : k;
    r.add_term(exp * e, s);
  }
  return r;
}

std::string LaurentPoly::show(const std::string& var, int denom) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    auto [e, k] = *it;
    if (k > 0 && !first) os << " + ";
    if (k < 0) os << (first ? "-" : " - ");
    long long ak = k < 0 ? -k : k;
    if (ak != 1 || e == 0) os << ak;
    if (e != 0) {
      if (ak != 1) os << "*";
      os << var;
      if (denom != 1 && e % denom != 0) {
        int g = std::gcd(e < 0 ? -e : e, denom);
        os << "^(" << e / g << "/" << denom / g << ")";
      } else {
        int ee = denom == 1 ? e : e / denom;
        if (ee != 1) os << "^" << ee;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace qw
