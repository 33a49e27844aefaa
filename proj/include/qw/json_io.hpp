#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qw/cochain.hpp"
#include "qw/cycles.hpp"
#include "qw/invariants.hpp"
#include "qw/quandle.hpp"

namespace qw {

using nlohmann::json;

std::string read_file(const std::string& path);
json load_json(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// {"label": str, "size": n, "table": [[...], ...]}
json quandle_to_json(const FiniteQuandle& q);
FiniteQuandle quandle_from_json(const json& j);

// {"p": q} or {"p": q, "h": [c0, c1, ...]} (constant term first)
json coeff_to_json(const CoefficientModule& m);
CoefficientModule coeff_from_json(const json& j);

// {"level": n, "quandle": {"label","size"}, "coefficients": {...},
//  "twisted": bool, "values": [[[x1..xn], [a0..]], ...]}; omitted tuples are 0
json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j);

// {"level": n, "terms": [[[x1..xn], k], ...]}
json chain_to_json(const FormalChain& c);
FormalChain chain_from_json(const json& j);

// {"records": [{"x","y","z","sign","alex"}, ...]} for a single coloring, or
// {"colorings": [[...records...], ...]} for a batch
std::vector<std::vector<TriplePointRecord>> triples_from_json(const json& j);

json group_ring_to_json(const GroupRingElement& g, const CoefficientModule& m);

// {"mult": [[...]], "subset": [...], "exponent": n, "label": str}
FiniteQuandle conjugation_from_json(const json& j);

// hex FNV-1a digest for run manifests
std::string fnv1a_digest(const std::string& data);

}  // namespace qw
