#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qw/homology.hpp"
#include "qw/invariants.hpp"
#include "qw/json_io.hpp"
#include "qw/reproduce.hpp"

using namespace qw;

namespace {

KnotDiagram pd(const std::string& name) {
  return KnotDiagram::parse_pd(read_file("data/" + name + ".pd"));
}

// Independent recursive skein oracle for the bracket: smooth one crossing at a
// time, merging edge identifications through a union-find; loops are the
// classes left when no crossings remain. Spin-model normalization.
struct SkeinState {
  std::vector<std::array<long long, 4>> crossings;
  std::map<long long, long long> parent;

  long long find(long long x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    return parent[x] = find(it->second);
  }
  void unite(long long a, long long b) { parent[find(a)] = find(b); }
};

LaurentPoly skein_bracket(SkeinState st, int extra_loops) {
  LaurentPoly delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  if (st.crossings.empty()) {
    std::set<long long> classes;
    std::set<long long> labels;
    for (auto& [k, v] : st.parent) labels.insert(k);
    for (long long l : labels) classes.insert(st.find(l));
    return delta.pow(static_cast<int>(classes.size()) + extra_loops);
  }
  auto cr = st.crossings.back();
  st.crossings.pop_back();
  for (long long e : cr) st.parent.emplace(e, e);
  SkeinState a = st;
  a.unite(cr[0], cr[1]);
  a.unite(cr[2], cr[3]);
  SkeinState b = st;
  b.unite(cr[0], cr[3]);
  b.unite(cr[1], cr[2]);
  return LaurentPoly::mono(1).times(skein_bracket(std::move(a), extra_loops))
      .plus(LaurentPoly::mono(-1).times(skein_bracket(std::move(b), extra_loops)));
}

LaurentPoly skein_bracket_of(const KnotDiagram& k) {
  SkeinState st;
  for (const auto& cr : k.crossings()) {
    std::array<long long, 4> labels;
    for (int s = 0; s < 4; ++s) labels[s] = k.edge_label(cr.e[s]);
    st.crossings.push_back(labels);
  }
  return skein_bracket(std::move(st), 0);
}

LaurentPoly skein_jones(const KnotDiagram& k) {
  LaurentPoly delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  int w = k.writhe();
  int e = -3 * w;
  // divide one loop factor out of the spin bracket, then normalize by (-A)^{-3w}
  LaurentPoly spin = skein_bracket_of(k);
  // exact division by delta via long division on the exponent-sorted terms
  LaurentPoly rem = spin, quot;
  while (!rem.is_zero()) {
    auto it = rem.c.rbegin();
    int exp = it->first - 2;
    long long coef = -it->second;
    quot.add_term(exp, coef);
    rem = rem.minus(delta.times(LaurentPoly::mono(exp, coef)));
  }
  LaurentPoly norm = quot.times(LaurentPoly::mono(e, (e % 2 == 0) ? 1 : -1));
  LaurentPoly v;
  for (auto [ee, kk] : norm.c) v.add_term(-ee, kk);
  return v;
}

GroupRingElement neg_image(const GroupRingElement& g, const CoefficientModule& a) {
  GroupRingElement out;
  for (const auto& [e, k] : g.terms) out.add(a.neg(e), k);
  return out;
}

Cochain delta_of_one_cochain(const FiniteQuandle& x, const Cochain& psi) {
  const CoefficientModule& a = psi.coeff;
  Cochain out;
  out.level = 2;
  out.quandle_size = x.size();
  out.quandle_label = x.label();
  out.coeff = a;
  out.twisted = psi.twisted;
  for (int x1 = 0; x1 < x.size(); ++x1)
    for (int x2 = 0; x2 < x.size(); ++x2) {
      if (x1 == x2) continue;
      auto t = [&](const CoefficientModule::Elem& e) {
        return psi.twisted ? a.t_act(e) : e;
      };
      auto v = a.sub(a.add(t(psi.eval({x1})), a.sub(psi.eval({x2}), t(psi.eval({x2})))),
                     psi.eval({x.op(x1, x2)}));
      out.set({x1, x2}, v);
    }
  return out;
}

Cochain random_one_cochain(const FiniteQuandle& x, const CoefficientModule& a,
                           bool twisted, std::mt19937& rng) {
  Cochain psi;
  psi.level = 1;
  psi.quandle_size = x.size();
  psi.quandle_label = x.label();
  psi.coeff = a;
  psi.twisted = twisted;
  for (int i = 0; i < x.size(); ++i) {
    CoefficientModule::Elem e(a.dim());
    for (int j = 0; j < a.dim(); ++j) e[j] = static_cast<long>(rng() % a.q());
    psi.set({i}, e);
  }
  return psi;
}

}  // namespace

TEST_CASE("bracket and jones against the skein oracle") {
  for (const std::string name : {"3_1", "4_1", "5_1", "5_2", "6_1", "hopf", "unknot_kink"}) {
    auto k = pd(name);
    CHECK(bracket(k) == skein_bracket_of(k));
    CHECK(jones(k) == skein_jones(k));
    auto m = k.mirror();
    CHECK(jones(m) == skein_jones(m));
  }
  CHECK(jones(pd("3_1")) == frozen_jones_3_1());
  CHECK(jones(pd("3_1").mirror()) == frozen_jones_3_1_mirror());
  CHECK(jones(pd("4_1")) == frozen_jones_4_1());
}

TEST_CASE("bracket normalizations") {
  auto u = pd("unknot");
  LaurentPoly delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  CHECK(bracket(u) == delta);
  CHECK(bracket(u, true) == LaurentPoly::mono(0, 1));
  CHECK(jones_to_string(jones(u)) == "1");

  // an extra positive kink scales the bracket but not the normalized form
  auto kink = pd("unknot_kink");
  CHECK(normalized_bracket(kink) == normalized_bracket(u));
  CHECK(normalized_bracket(pd("3_1")) == normalized_bracket(pd("3_1_r1pos")));
}

TEST_CASE("jones separates mirrors exactly when it should") {
  auto tre = pd("3_1");
  auto fig8 = pd("4_1");
  CHECK(jones(tre) != jones(tre.mirror()));
  CHECK(jones(fig8) == jones(fig8.mirror()));
}

TEST_CASE("state-sum mass equals the coloring count") {
  Cochain phi = s4_two_cocycle();
  auto s4 = make_alexander(2, {1, 1, 1});
  for (const std::string name : {"3_1", "4_1", "5_1", "unknot"}) {
    auto k = pd(name);
    auto v = cocycle_invariant(k, s4, phi);
    CHECK(v.mass() == static_cast<long long>(k.colorings(s4).size()));
  }
  auto ext = extension_cocycle(3, 2, {1, 1});
  auto r3 = make_dihedral(3);
  auto tw = twisted_cocycle_invariant(pd("3_1"), r3, ext.phi);
  CHECK(tw.mass() == 9);
}

TEST_CASE("trefoil and figure-eight carry nontrivial state-sums over S_4") {
  Cochain phi = s4_two_cocycle();
  auto s4 = make_alexander(2, {1, 1, 1});
  CoefficientModule z2 = CoefficientModule::plain(2);
  auto v31 = cocycle_invariant(pd("3_1"), s4, phi);
  auto v41 = cocycle_invariant(pd("4_1"), s4, phi);
  GroupRingElement expected;
  expected.add({0}, 4);
  expected.add({1}, 12);
  CHECK(v31 == expected);
  CHECK(v41 == expected);
  CHECK(cocycle_invariant(pd("unknot"), s4, phi) == GroupRingElement::trivial(z2, 4));
}

TEST_CASE("non-cocycles are rejected") {
  auto s4 = make_alexander(2, {1, 1, 1});
  Cochain bad = s4_two_cocycle();
  bad.add_term({0, 1}, {1});  // now chi_{0,1} is missing: no longer a cocycle
  CHECK_FALSE(is_cocycle(s4, bad, Theory::quandle, false).ok);
  CHECK_THROWS_AS(cocycle_invariant(pd("3_1"), s4, bad), input_error);
  CHECK_THROWS_AS(lopes_family(pd("3_1"), s4, bad), input_error);
}

TEST_CASE("twisted invariant needs a connected diagram") {
  auto ext = extension_cocycle(3, 2, {1, 1});
  auto two = KnotDiagram::parse_pd("allow-disconnected: true\nX(1,1,2,2)\nX(3,3,4,4)\n");
  CHECK_THROWS_AS(twisted_cocycle_invariant(two, make_dihedral(3), ext.phi), input_error);
}

TEST_CASE("coboundaries only count colorings, twisted included") {
  std::mt19937 rng(41);
  auto t2 = make_trivial(2);
  CoefficientModule m = CoefficientModule::alexander(4, {1, 1});
  auto hopf = pd("hopf");
  long col = static_cast<long>(hopf.colorings(t2).size());
  for (int trial = 0; trial < 10; ++trial) {
    Cochain psi = random_one_cochain(t2, m, true, rng);
    auto v = twisted_cocycle_invariant(hopf, t2, delta_of_one_cochain(t2, psi));
    CHECK(v == GroupRingElement::trivial(m, col));
  }
}

TEST_CASE("a nontrivial twisted class on the Hopf link") {
  auto t2 = make_trivial(2);
  CoefficientModule m = CoefficientModule::alexander(4, {1, 1});
  auto spec = ChainComplexSpec::over_module(t2, Theory::quandle, m);
  CHECK(cohomology(spec, 2) == AbelianGroupDescriptor{0, {2, 2}});
  Cochain z = chi(t2.label(), 2, m, true, {0, 1}, 1).plus(chi(t2.label(), 2, m, true, {1, 0}, 1));
  CHECK(is_cocycle(t2, z, Theory::quandle, true).ok);
  CHECK_FALSE(is_coboundary(t2, z).has_value());

  auto hopf = pd("hopf");
  auto v = twisted_cocycle_invariant(hopf, t2, z);
  GroupRingElement expected;
  expected.add({0}, 2);
  expected.add({2}, 2);
  CHECK(v == expected);

  // agreement across a Reidemeister variant, and class dependence
  auto v2 = twisted_cocycle_invariant(pd("hopf_r1"), t2, z);
  CHECK(v == v2);
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    Cochain psi = random_one_cochain(t2, m, true, rng);
    auto vp = twisted_cocycle_invariant(hopf, t2, z.plus(delta_of_one_cochain(t2, psi)));
    CHECK(vp == v);
  }
}

TEST_CASE("mirror inverts every weight") {
  // over the trivial quandle with Z_4 coefficients every 2-cochain is a
  // cocycle, and the Hopf state-sum is nontrivial
  auto t2 = make_trivial(2);
  CoefficientModule z4 = CoefficientModule::plain(4);
  Cochain phi = chi(t2.label(), 2, z4, false, {0, 1}, 1);
  CHECK(is_cocycle(t2, phi, Theory::quandle, false).ok);
  auto hopf = pd("hopf");
  auto v = cocycle_invariant(hopf, t2, phi);
  GroupRingElement expected;
  expected.add({0}, 2);
  expected.add({1}, 2);
  CHECK(v == expected);
  CHECK(cocycle_invariant(hopf.mirror(), t2, phi) == neg_image(v, z4));

  Cochain phis4 = s4_two_cocycle();
  auto s4 = make_alexander(2, {1, 1, 1});
  auto tre = pd("3_1");
  CHECK(cocycle_invariant(tre.mirror(), s4, phis4) ==
        neg_image(cocycle_invariant(tre, s4, phis4), CoefficientModule::plain(2)));
}

TEST_CASE("lopes family refines the state-sum") {
  Cochain phi = s4_two_cocycle();
  auto s4 = make_alexander(2, {1, 1, 1});
  auto tre = pd("3_1");
  auto fam = lopes_family(tre, s4, phi);
  GroupRingElement sum;
  for (const auto& e : fam) sum.add(e);
  CHECK(sum == cocycle_invariant(tre, s4, phi));

  // only constant colorings: |X| copies of the identity
  auto r3 = make_dihedral(3);
  auto fig8 = pd("4_1");
  Cochain zero3;
  zero3.level = 2;
  zero3.quandle_size = 3;
  zero3.quandle_label = r3.label();
  zero3.coeff = CoefficientModule::plain(3);
  auto fam2 = lopes_family(fig8, r3, zero3);
  CHECK(fam2.size() == 3);
  for (const auto& e : fam2) CHECK(zero3.coeff.is_zero(e));
}

TEST_CASE("link component vector") {
  auto hopf = pd("hopf");
  auto t2 = make_trivial(2);
  CoefficientModule z2 = CoefficientModule::plain(2);
  Cochain zero;
  zero.level = 2;
  zero.quandle_size = 2;
  zero.quandle_label = t2.label();
  zero.coeff = z2;
  auto vec = link_component_vector(hopf, t2, zero);
  REQUIRE(vec.size() == 2);
  CHECK(vec[0] == GroupRingElement::trivial(z2, 4));
  CHECK(vec[1] == GroupRingElement::trivial(z2, 4));

  // a knot gives a vector of length one equal to the plain state-sum
  Cochain phi = s4_two_cocycle();
  auto s4 = make_alexander(2, {1, 1, 1});
  auto tre = pd("3_1");
  auto kv = link_component_vector(tre, s4, phi);
  REQUIRE(kv.size() == 1);
  CHECK(kv[0] == cocycle_invariant(tre, s4, phi));

  // per-component coboundary argument over R_3
  auto r3 = make_dihedral(3);
  std::mt19937 rng(47);
  Cochain psi = random_one_cochain(r3, CoefficientModule::plain(3), false, rng);
  auto cb = delta_of_one_cochain(r3, psi);
  long col = static_cast<long>(hopf.colorings(r3).size());
  for (const auto& g : link_component_vector(hopf, r3, cb))
    CHECK(g == GroupRingElement::trivial(psi.coeff, col));

  // the componentwise weights multiply back to the total weight
  CoefficientModule z4 = CoefficientModule::plain(4);
  Cochain phi2 = chi(t2.label(), 2, z4, false, {0, 1}, 1);
  auto parts = link_component_vector(hopf, t2, phi2);
  auto total = cocycle_invariant(hopf, t2, phi2);
  long long mass = 0;
  for (const auto& g : parts) mass += g.mass();
  CHECK(mass == 2 * total.mass());
}

TEST_CASE("surface state-sum evaluator") {
  auto r3 = make_dihedral(3);
  Cochain theta = r3_three_cocycle();
  CoefficientModule z3 = CoefficientModule::plain(3);

  CHECK(surface_weight({}, r3, theta, false) == z3.zero());

  // a single negative triple point colored (0,1,0) contributes the inverse of
  // the coefficient -1, that is +1
  std::vector<TriplePointRecord> rec{{0, 1, 0, -1, 0}};
  CHECK(surface_weight(rec, r3, theta, false) == CoefficientModule::Elem{1});

  std::vector<TriplePointRecord> zero_rec{{0, 1, 2, 1, 0}};
  CHECK(surface_weight(zero_rec, r3, theta, false) == z3.zero());

  auto batch = surface_state_sum({{}, rec}, r3, theta, false);
  GroupRingElement expected;
  expected.add({0}, 1);
  expected.add({1}, 1);
  CHECK(batch == expected);

  Cochain bad = theta;
  bad.add_term({0, 1, 2}, {1});
  CHECK_THROWS_AS(surface_weight(rec, r3, bad, false), input_error);

  // twisted evaluation applies T^{-alex} to each weight; over Z_3 with T = -1
  // an odd Alexander number negates
  CoefficientModule m3 = CoefficientModule::alexander(3, {1, 1});
  Cochain theta_tw;
  theta_tw.level = 3;
  theta_tw.quandle_size = 3;
  theta_tw.quandle_label = r3.label();
  theta_tw.coeff = m3;
  theta_tw.twisted = true;
  // build a twisted 3-cocycle from a basis element of Z^3_TQ(R3; R3)
  auto spec = ChainComplexSpec::over_module(r3, Theory::quandle, m3);
  auto zb = cocycle_basis(spec, 3);
  REQUIRE(!zb.empty());
  const Cochain& zt = zb.front();
  std::vector<int> t0;
  for (const auto& [t, v] : zt.values) {
    t0 = t;
    break;
  }
  REQUIRE(!t0.empty());
  auto w0 = surface_weight({{t0[0], t0[1], t0[2], 1, 0}}, r3, zt, true);
  auto w1 = surface_weight({{t0[0], t0[1], t0[2], 1, 1}}, r3, zt, true);
  CHECK(w1 == m3.t_pow(w0, -1));
}
