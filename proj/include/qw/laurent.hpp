#pragma once

#include <map>
#include <string>

namespace qw {

// Finitely supported integer Laurent polynomial, exponent -> coefficient.
struct LaurentPoly {
  std::map<int, long long> c;

  static LaurentPoly mono(int exp, long long k = 1);
  bool is_zero() const { return c.empty(); }
  LaurentPoly plus(const LaurentPoly& o) const;
  LaurentPoly minus(const LaurentPoly& o) const;
  LaurentPoly times(const LaurentPoly& o) const;
  LaurentPoly scaled(long long k) const;
  LaurentPoly pow(int n) const;
  void add_term(int exp, long long k);
  // substitute the variable by (sign) * var^e: A -> -A gives sign=-1, e=1
  LaurentPoly substitute_power(int e, int sign = 1) const;
  bool operator==(const LaurentPoly& o) const { return c == o.c; }
  bool operator!=(const LaurentPoly& o) const { return !(c == o.c); }
  // exponents printed as exp/denom; denom 1 for plain variables
  std::string show(const std::string& var, int denom = 1) const;
};

}  // namespace qw
