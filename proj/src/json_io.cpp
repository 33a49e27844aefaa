#include "qw/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qw {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open " + path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw input_error("cannot write " + path);
  f << text;
}

json quandle_to_json(const FiniteQuandle& q) {
  return json{{"label", q.label()}, {"size", q.size()}, {"table", q.table()}};
}

FiniteQuandle quandle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("table"))
    throw input_error("quandle file needs \"size\" and \"table\"");
  int n = j.at("size").get<int>();
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != n)
    throw input_error("quandle table does not match the declared size");
  std::string label = j.value("label", std::string("quandle"));
  return FiniteQuandle(label, std::move(table));
}

json coeff_to_json(const CoefficientModule& m) {
  json j{{"p", m.q()}};
  if (!m.plain_zq()) j["h"] = m.modulus_poly();
  return j;
}

CoefficientModule coeff_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p")) throw input_error("coefficients need \"p\"");
  long q = j.at("p").get<long>();
  if (j.contains("h") && !j.at("h").empty()) {
    auto h = j.at("h").get<std::vector<long>>();
    return CoefficientModule::alexander(q, h);
  }
  return CoefficientModule::plain(q);
}

json cochain_to_json(const Cochain& c) {
  json values = json::array();
  for (const auto& [t, v] : c.values) values.push_back(json::array({t, v}));
  json j{{"level", c.level},
         {"quandle", {{"label", c.quandle_label}, {"size", c.quandle_size}}},
         {"coefficients", coeff_to_json(c.coeff)},
         {"twisted", c.twisted},
         {"values", values}};
  if (c.rack_theory) j["rack"] = true;
  return j;
}

Cochain cochain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("quandle") ||
      !j.contains("coefficients"))
    throw input_error("cochain file needs \"level\", \"quandle\", \"coefficients\"");
  Cochain c;
  c.level = j.at("level").get<int>();
  if (c.level < 1) throw input_error("cochain level must be >= 1");
  const json& q = j.at("quandle");
  if (q.is_object()) {
    c.quandle_size = q.at("size").get<int>();
    c.quandle_label = q.value("label", std::string());
  } else {
    throw input_error("cochain \"quandle\" must carry label and size");
  }
  c.coeff = coeff_from_json(j.at("coefficients"));
  c.twisted = j.value("twisted", false);
  c.rack_theory = j.value("rack", false);
  for (const json& entry : j.value("values", json::array())) {
    if (!entry.is_array() || entry.size() != 2)
      throw input_error("cochain values are [tuple, value] pairs");
    auto t = entry[0].get<std::vector<int>>();
    CoefficientModule::Elem v;
    if (entry[1].is_number()) {
      v = c.coeff.zero();
      v[0] = mod_norm(entry[1].get<long>(), c.coeff.q());
    } else {
      auto raw = entry[1].get<std::vector<long>>();
      if (static_cast<int>(raw.size()) != c.coeff.dim())
        throw input_error("cochain value has wrong module dimension");
      v = c.coeff.zero();
      for (size_t i = 0; i < raw.size(); ++i) v[i] = mod_norm(raw[i], c.coeff.q());
    }
    c.set(t, v);
  }
  return c;
}

json chain_to_json(const FormalChain& c) {
  json terms = json::array();
  for (const auto& [t, k] : c.terms) terms.push_back(json::array({t, k}));
  return json{{"level", c.level}, {"terms", terms}};
}

FormalChain chain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("level")) throw input_error("chain file needs \"level\"");
  FormalChain c;
  c.level = j.at("level").get<int>();
  for (const json& entry : j.value("terms", json::array())) {
    if (!entry.is_array() || entry.size() != 2)
      throw input_error("chain terms are [tuple, coefficient] pairs");
    auto t = entry[0].get<std::vector<int>>();
    if (static_cast<int>(t.size()) != c.level)
      throw input_error("chain tuple has wrong length");
    c.add_term(t, entry[1].get<long long>());
  }
  return c;
}

namespace {

TriplePointRecord record_from_json(const json& j) {
  if (!j.is_object()) throw input_error("triple point records are objects");
  TriplePointRecord r;
  r.x = j.at("x").get<int>();
  r.y = j.at("y").get<int>();
  r.z = j.at("z").get<int>();
  r.sign = j.value("sign", 1);
  r.alex = j.value("alex", 0);
  return r;
}

}  // namespace

std::vector<std::vector<TriplePointRecord>> triples_from_json(const json& j) {
  std::vector<std::vector<TriplePointRecord>> out;
  if (j.contains("colorings")) {
    for (const json& batch : j.at("colorings")) {
      std::vector<TriplePointRecord> records;
      for (const json& r : batch) records.push_back(record_from_json(r));
      out.push_back(std::move(records));
    }
  } else if (j.contains("records")) {
    std::vector<TriplePointRecord> records;
    for (const json& r : j.at("records")) records.push_back(record_from_json(r));
    out.push_back(std::move(records));
  } else {
    throw input_error("triple point file needs \"records\" or \"colorings\"");
  }
  return out;
}

json group_ring_to_json(const GroupRingElement& g, const CoefficientModule& m) {
  json terms = json::array();
  for (const auto& [e, k] : g.terms)
    terms.push_back(json{{"element", m.show(e)}, {"coords", e}, {"multiplicity", k}});
  return json{{"terms", terms}, {"mass", g.mass()}};
}

FiniteQuandle conjugation_from_json(const json& j) {
  if (!j.contains("mult") || !j.contains("subset"))
    throw input_error("conjugation file needs \"mult\" and \"subset\"");
  auto mult = j.at("mult").get<std::vector<std::vector<int>>>();
  auto subset = j.at("subset").get<std::vector<int>>();
  int expo = j.value("exponent", 1);
  std::string label = j.value("label", std::string("conj"));
  return make_conjugation(mult, subset, expo, label);
}

std::string fnv1a_digest(const std::string& data) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return std::string(buf);
}

}  // namespace qw
