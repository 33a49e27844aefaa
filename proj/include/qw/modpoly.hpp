#pragma once

#include <string>
#include <vector>

#include "qw/common.hpp"

namespace qw {

long mod_norm(long long v, long q);
long mod_inv(long a, long q);  // throws input_error when a is not a unit mod q

// Finite Alexander coefficient module Z_q[T]/(h): residue polynomials of degree
// < deg h with coefficients in [0,q), and an invertible T action. h must have
// unit leading and constant coefficients. Plain Z_q is the special case
// h = T - 1, where T acts as the identity.
class CoefficientModule {
 public:
  using Elem = std::vector<long>;

  static CoefficientModule plain(long q);
  static CoefficientModule alexander(long q, std::vector<long> h);

  long q() const { return q_; }
  int dim() const { return static_cast<int>(h_.size()) - 1; }
  bool plain_zq() const { return plain_; }
  long long size() const;
  // Monic-normalized modulus polynomial, constant term first.
  const std::vector<long>& modulus_poly() const { return h_; }

  Elem zero() const { return Elem(dim(), 0); }
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scal(long k, const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem t_act(const Elem& a) const;             // T a
  Elem t_pow(const Elem& a, long e) const;     // T^e a, any integer e
  Elem star(const Elem& a, const Elem& b) const;  // Ta + (1-T)b

  long long to_index(const Elem& a) const;
  Elem from_index(long long idx) const;

  std::string show(const Elem& a) const;
  std::string describe() const;

  // dim x dim integer matrix (entries in [0,q)) of T^e on the basis 1,T,...
  std::vector<std::vector<long>> t_matrix(long e) const;

  bool operator==(const CoefficientModule& o) const {
    return q_ == o.q_ && h_ == o.h_;
  }
  bool operator!=(const CoefficientModule& o) const { return !(*this == o); }

 private:
  CoefficientModule() = default;
  Elem reduce(std::vector<long> raw) const;  // length may exceed dim

  long q_ = 0;
  std::vector<long> h_;  // monic: h_.back() == 1, h_[0] a unit
  Elem tinv_;            // T^{-1} as a residue polynomial
  bool plain_ = false;
};

std::string show_poly(const std::vector<long>& coeffs, const char* var = "T");

}  // namespace qw
