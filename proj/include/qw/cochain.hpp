#pragma once

#include <map>
#include <string>
#include <vector>

#include "qw/common.hpp"
#include "qw/modpoly.hpp"

namespace qw {

inline bool degenerate_tuple(const std::vector<int>& t) {
  for (size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return true;
  return false;
}

// A map from n-tuples of quandle elements to coefficient-module elements.
// Quandle-theory cochains vanish on tuples with two equal adjacent entries;
// only nonzero values are stored.
struct Cochain {
  int level = 0;
  int quandle_size = 0;
  std::string quandle_label;
  CoefficientModule coeff = CoefficientModule::plain(2);
  bool twisted = false;     // meant for the twisted complex (T-deformed boundary)
  bool rack_theory = false; // rack cochains may be nonzero on degenerate tuples
  std::map<std::vector<int>, CoefficientModule::Elem> values;

  CoefficientModule::Elem eval(const std::vector<int>& t) const;
  void set(const std::vector<int>& t, const CoefficientModule::Elem& v);
  void add_term(const std::vector<int>& t, const CoefficientModule::Elem& v);
  bool is_zero() const { return values.empty(); }

  Cochain plus(const Cochain& o) const;
  Cochain minus(const Cochain& o) const;

  std::string show() const;  // "2*chi_(1,0) + chi_(0,2)" style
};

// characteristic cochain k * chi_t
Cochain chi(const std::string& quandle_label, int quandle_size,
            const CoefficientModule& coeff, bool twisted,
            const std::vector<int>& t, long k = 1);

}  // namespace qw
