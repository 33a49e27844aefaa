#include "qw/cochain.hpp"

#include <sstream>

namespace qw {

CoefficientModule::Elem Cochain::eval(const std::vector<int>& t) const {
  if (!rack_theory && degenerate_tuple(t)) return coeff.zero();
  auto it = values.find(t);
  return it == values.end() ? coeff.zero() : it->second;
}

void Cochain::set(const std::vector<int>& t, const CoefficientModule::Elem& v) {
  if (static_cast<int>(t.size()) != level)
    throw input_error("cochain tuple has wrong length");
  for (int x : t)
    if (x < 0 || x >= quandle_size) throw input_error("cochain tuple entry out of range");
  if (!rack_theory && degenerate_tuple(t)) {
    if (!coeff.is_zero(v))
      throw input_error("quandle cochain must vanish on degenerate tuples");
    return;
  }
  if (coeff.is_zero(v))
    values.erase(t);
  else
    values[t] = v;
}

void Cochain::add_term(const std::vector<int>& t, const CoefficientModule::Elem& v) {
  set(t, coeff.add(eval(t), v));
}

Cochain Cochain::plus(const Cochain& o) const {
  if (level != o.level || quandle_size != o.quandle_size || !(coeff == o.coeff))
    throw input_error("cochain mismatch in addition");
  Cochain r = *this;
  for (const auto& [t, v] : o.values) r.add_term(t, v);
  return r;
}

Cochain Cochain::minus(const Cochain& o) const {
  if (level != o.level || quandle_size != o.quandle_size || !(coeff == o.coeff))
    throw input_error("cochain mismatch in subtraction");
  Cochain r = *this;
  for (const auto& [t, v] : o.values) r.add_term(t, coeff.neg(v));
  return r;
}

std::string Cochain::show() const {
  if (values.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, v] : values) {
    if (!first) os << " + ";
    std::string sv = coeff.show(v);
    if (sv != "1") os << "(" << sv << ")*";
    os << "chi_(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) os << ",";
      os << t[i];
    }
    os << ")";
    first = false;
  }
  return os.str();
}

Cochain chi(const std::string& quandle_label, int quandle_size,
            const CoefficientModule& coeff, bool twisted,
            const std::vector<int>& t, long k) {
  Cochain c;
  c.level = static_cast<int>(t.size());
  c.quandle_size = quandle_size;
  c.quandle_label = quandle_label;
  c.coeff = coeff;
  c.twisted = twisted;
  CoefficientModule::Elem v = coeff.zero();
  v[0] = mod_norm(k, coeff.q());
  c.set(t, v);
  return c;
}

}  // namespace qw
