// qw: quandle colorings, quandle/rack cohomology, and cocycle knot invariants
// from PD-coded diagrams.

#include <chrono>
#include <iostream>
#include <algorithm>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qw/cycles.hpp"
#include "qw/diagram.hpp"
#include "qw/homology.hpp"
#include "qw/invariants.hpp"
#include "qw/json_io.hpp"
#include "qw/quandle.hpp"
#include "qw/reproduce.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Session {
  bool as_json = false;
  std::string command;
  std::map<std::string, std::string> input_digests;
  qw::json output;
  std::ostringstream text;

  std::string read_input(const std::string& path) {
    std::string data = qw::read_file(path);
    input_digests[path] = qw::fnv1a_digest(data);
    return data;
  }
  qw::json load_input(const std::string& path) {
    std::string data = read_input(path);
    try {
      return qw::json::parse(data);
    } catch (const qw::json::parse_error& e) {
      throw qw::input_error(path + ": " + e.what());
    }
  }
  qw::KnotDiagram load_pd(const std::string& path) {
    return qw::KnotDiagram::parse_pd(read_input(path));
  }
  qw::FiniteQuandle load_quandle(const std::string& path) {
    return qw::quandle_from_json(load_input(path));
  }
  qw::Cochain load_cochain(const std::string& path) {
    return qw::cochain_from_json(load_input(path));
  }
};

std::vector<long> parse_poly(const std::string& csv) {
  std::vector<long> h;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) h.push_back(std::stol(tok));
  return h;
}

// tokens: Z, Z<q>, R<q> (= Z_q[T]/(T+1), twisted), or a coefficient JSON path
struct CoeffChoice {
  long q = 0;
  std::optional<qw::CoefficientModule> module;
  bool twisted = false;
};

CoeffChoice parse_coeff(Session& s, const std::string& tok) {
  CoeffChoice c;
  if (tok == "Z") return c;
  if (tok.size() > 1 && tok[0] == 'Z' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
    c.q = std::stol(tok.substr(1));
    return c;
  }
  if (tok.size() > 1 && tok[0] == 'R' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
    long q = std::stol(tok.substr(1));
    c.module = qw::CoefficientModule::alexander(q, {1, 1});
    c.q = q;
    c.twisted = true;
    return c;
  }
  qw::json j = s.load_input(tok);
  c.module = qw::coeff_from_json(j);
  c.q = c.module->q();
  c.twisted = j.value("twisted", !c.module->plain_zq());
  return c;
}

void emit_quandle(Session& s, const qw::FiniteQuandle& q, const std::string& out_path) {
  qw::json j = qw::quandle_to_json(q);
  if (!out_path.empty()) {
    qw::write_file(out_path, j.dump(1) + "\n");
    s.text << "wrote " << q.label() << " (size " << q.size() << ") to " << out_path << "\n";
  } else {
    s.text << j.dump(1) << "\n";
  }
  s.output = j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quandle cocycle knot invariants"};
  app.set_version_flag("--version", kVersion);
  Session s;
  app.add_flag("--json", s.as_json, "emit a machine-readable run manifest");

  // make-quandle
  auto* mk = app.add_subcommand("make-quandle", "construct a built-in quandle");
  std::string mk_kind, mk_h, mk_out, mk_group;
  int mk_n = 0;
  long mk_q = 0;
  mk->add_option("kind", mk_kind, "trivial|dihedral|alexander|qs6|conj")->required();
  mk->add_option("n", mk_n, "size parameter for trivial/dihedral");
  mk->add_option("--q", mk_q, "modulus for alexander");
  mk->add_option("--poly", mk_h, "polynomial for alexander, constant term first (c0,c1,...)");
  mk->add_option("--group", mk_group, "JSON with mult/subset/exponent for conj");
  mk->add_option("-o,--out", mk_out, "output file");

  // verify-quandle
  auto* vq = app.add_subcommand("verify-quandle", "check the three quandle axioms");
  std::string vq_file;
  vq->add_option("file", vq_file)->required();

  // extend
  auto* ex = app.add_subcommand("extend", "extension quandles and extension cocycles");
  std::string ex_base, ex_fiber, ex_cocycle, ex_out, ex_h;
  long ex_p = 0;
  int ex_m = 0;
  bool ex_abelian = false;
  ex->add_option("--base", ex_base, "base quandle JSON");
  ex->add_option("--fiber", ex_fiber, "fiber coefficients JSON");
  ex->add_option("--cocycle", ex_cocycle, "2-cocycle JSON");
  ex->add_flag("--abelian", ex_abelian, "force the abelian extension form");
  ex->add_option("--tower-p", ex_p, "extract the cocycle of Z_{p^m}/(h) over Z_{p^{m-1}}");
  ex->add_option("--tower-m", ex_m, "tower exponent m >= 2");
  ex->add_option("--poly", ex_h, "tower polynomial, constant term first");
  ex->add_option("-o,--out", ex_out, "output file");

  // homology
  auto* ho = app.add_subcommand("homology", "homology/cohomology of a quandle complex");
  std::string ho_quandle, ho_theory = "quandle", ho_coeff = "Z";
  int ho_level = 2;
  bool ho_co = false;
  ho->add_option("--quandle", ho_quandle)->required();
  ho->add_option("--theory", ho_theory, "rack|degenerate|quandle");
  ho->add_option("--level", ho_level)->required();
  ho->add_option("--coeff", ho_coeff, "Z, Zq, Rq, or a coefficients JSON");
  ho->add_flag("--co", ho_co, "cohomology instead of homology");

  // check-cocycle
  auto* cc = app.add_subcommand("check-cocycle", "cocycle and coboundary tests");
  std::string cc_file, cc_quandle, cc_theory = "quandle";
  cc->add_option("file", cc_file)->required();
  cc->add_option("--quandle", cc_quandle, "quandle JSON (table)")->required();
  cc->add_option("--theory", cc_theory);

  // col
  auto* col = app.add_subcommand("col", "count quandle colorings of a diagram");
  std::string col_pd, col_quandle;
  col->add_option("--pd", col_pd)->required();
  col->add_option("--quandle", col_quandle)->required();

  // phi
  auto* ph = app.add_subcommand("phi", "untwisted cocycle state-sum");
  std::string ph_pd, ph_quandle, ph_cocycle;
  bool ph_components = false, ph_lopes = false;
  ph->add_option("--pd", ph_pd)->required();
  ph->add_option("--quandle", ph_quandle)->required();
  ph->add_option("--cocycle", ph_cocycle)->required();
  ph->add_flag("--components", ph_components, "one state-sum per link component");
  ph->add_flag("--lopes", ph_lopes, "per-coloring weight multiset");

  // phit
  auto* pt = app.add_subcommand("phit", "twisted cocycle state-sum");
  std::string pt_pd, pt_quandle, pt_cocycle, pt_coeff;
  pt->add_option("--pd", pt_pd)->required();
  pt->add_option("--quandle", pt_quandle)->required();
  pt->add_option("--cocycle", pt_cocycle)->required();
  pt->add_option("--coeff", pt_coeff, "optional cross-check of the cocycle coefficients");

  // surface
  auto* su = app.add_subcommand("surface", "knotted-surface state-sum on triple point data");
  std::string su_data, su_quandle, su_cocycle;
  bool su_twisted = false;
  su->add_option("--data", su_data)->required();
  su->add_option("--quandle", su_quandle)->required();
  su->add_option("--cocycle", su_cocycle)->required();
  su->add_flag("--twisted", su_twisted);

  // jones
  auto* jo = app.add_subcommand("jones", "bracket and Jones polynomials");
  std::string jo_pd;
  bool jo_bracket = false, jo_loop = false, jo_norm = false, jo_mirror = false;
  jo->add_option("--pd", jo_pd)->required();
  jo->add_flag("--bracket", jo_bracket, "print the bracket polynomial instead");
  jo->add_flag("--loop-norm", jo_loop, "divide one loop factor out of the bracket");
  jo->add_flag("--normalized", jo_norm, "print the writhe-normalized bracket");
  jo->add_flag("--mirror", jo_mirror, "use the mirror diagram");

  // cycles
  auto* cy = app.add_subcommand("cycles", "2-chains from colored crossings");
  auto* cyc = cy->add_subcommand("check", "is the chain a cycle");
  auto* cyb = cy->add_subcommand("bound", "find a bounding 3-chain");
  auto* cyp = cy->add_subcommand("pair", "Kronecker pairing with a cochain");
  std::string cy_chain, cy_quandle, cy_coeff = "Z", cy_cochain;
  cyc->add_option("chain", cy_chain)->required();
  cyc->add_option("--quandle", cy_quandle)->required();
  cyb->add_option("chain", cy_chain)->required();
  cyb->add_option("--quandle", cy_quandle)->required();
  cyb->add_option("--coeff", cy_coeff, "Z or Zq");
  cyp->add_option("--chain", cy_chain)->required();
  cyp->add_option("--cochain", cy_cochain)->required();

  // reproduce
  auto* re = app.add_subcommand("reproduce", "run the bundled reproduction suite");
  std::string re_data = "data";
  re->add_option("--data", re_data, "directory with the shipped PD files");

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  auto t0 = std::chrono::steady_clock::now();
  int exit_code = 0;
  try {
    if (mk->parsed()) {
      s.command = "make-quandle";
      qw::FiniteQuandle q = [&] {
        if (mk_kind == "trivial") return qw::make_trivial(mk_n);
        if (mk_kind == "dihedral") return qw::make_dihedral(mk_n);
        if (mk_kind == "alexander") {
          if (mk_q < 2 || mk_h.empty())
            throw qw::input_error("alexander needs --q and --poly");
          return qw::make_alexander(mk_q, parse_poly(mk_h));
        }
        if (mk_kind == "qs6") return qw::make_qs6();
        if (mk_kind == "conj") {
          if (mk_group.empty()) throw qw::input_error("conj needs --group");
          return qw::conjugation_from_json(s.load_input(mk_group));
        }
        throw qw::input_error("unknown quandle kind: " + mk_kind);
      }();
      emit_quandle(s, q, mk_out);
    } else if (vq->parsed()) {
      s.command = "verify-quandle";
      qw::json j = s.load_input(vq_file);
      int n = j.at("size").get<int>();
      auto table = j.at("table").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(table.size()) != n)
        throw qw::input_error("quandle table does not match the declared size");
      qw::AxiomReport rep = qw::verify_axioms(table);
      s.text << rep.describe() << "\n";
      s.output = {{"pass", rep.pass()},
                  {"idempotent", rep.idempotent},
                  {"right_invertible", rep.right_invertible},
                  {"distributive", rep.distributive},
                  {"witness", rep.witness}};
      if (!rep.pass()) exit_code = 2;
    } else if (ex->parsed()) {
      s.command = "extend";
      if (ex_p != 0 || ex_m != 0) {
        if (ex_p < 2 || ex_m < 2 || ex_h.empty())
          throw qw::input_error("tower extraction needs --tower-p, --tower-m >= 2 and --poly");
        qw::ExtensionCocycle ec = qw::extension_cocycle(ex_p, ex_m, parse_poly(ex_h));
        qw::json j = qw::cochain_to_json(ec.phi);
        j["base"] = qw::quandle_to_json(ec.base);
        if (!ex_out.empty()) {
          qw::write_file(ex_out, j.dump(1) + "\n");
          s.text << "wrote the extension cocycle of " << ec.total.label() << " over "
                 << ec.base.label() << " to " << ex_out << "\n";
        } else {
          s.text << ec.phi.show() << "\n";
        }
        s.output = j;
      } else {
        if (ex_base.empty() || ex_fiber.empty() || ex_cocycle.empty())
          throw qw::input_error("extend needs --base, --fiber and --cocycle");
        qw::FiniteQuandle base = s.load_quandle(ex_base);
        qw::CoefficientModule fiber = qw::coeff_from_json(s.load_input(ex_fiber));
        qw::Cochain phi = s.load_cochain(ex_cocycle);
        qw::FiniteQuandle total =
            (ex_abelian || (!phi.twisted && fiber.plain_zq()))
                ? qw::abelian_extension(base, fiber.q(), phi)
                : qw::alexander_extension(base, fiber, phi);
        emit_quandle(s, total, ex_out);
      }
    } else if (ho->parsed()) {
      s.command = "homology";
      qw::FiniteQuandle x = s.load_quandle(ho_quandle);
      CoeffChoice c = parse_coeff(s, ho_coeff);
      qw::ChainComplexSpec spec =
          c.twisted ? qw::ChainComplexSpec::over_module(x, qw::theory_from_name(ho_theory),
                                                        *c.module)
                    : qw::ChainComplexSpec::untwisted(x, qw::theory_from_name(ho_theory), c.q);
      spec.max_level = std::max(spec.max_level, ho_level + 1);
      qw::AbelianGroupDescriptor g =
          ho_co ? qw::cohomology(spec, ho_level) : qw::homology(spec, ho_level);
      s.text << g.show() << "\n";
      qw::json torsion = qw::json::array();
      for (const auto& d : g.torsion) torsion.push_back(d.get_str());
      s.output = {{"group", g.show()}, {"free_rank", g.free_rank}, {"torsion", torsion}};
    } else if (cc->parsed()) {
      s.command = "check-cocycle";
      qw::FiniteQuandle x = s.load_quandle(cc_quandle);
      qw::Cochain f = s.load_cochain(cc_file);
      qw::Theory th = qw::theory_from_name(cc_theory);
      qw::CocycleCheck chk = qw::is_cocycle(x, f, th, f.twisted);
      s.output["cocycle"] = chk.ok;
      if (chk.ok) {
        s.text << "cocycle: yes";
        auto psi = qw::is_coboundary(x, f, th);
        s.output["coboundary"] = psi.has_value();
        if (psi) {
          s.text << "; coboundary with witness " << psi->show() << "\n";
          s.output["witness"] = qw::cochain_to_json(*psi);
        } else {
          s.text << "; not a coboundary\n";
        }
      } else {
        s.text << "not a cocycle: " << chk.detail << "\n";
        s.output["witness_tuple"] = chk.witness;
      }
    } else if (col->parsed()) {
      s.command = "col";
      qw::KnotDiagram k = s.load_pd(col_pd);
      qw::FiniteQuandle x = s.load_quandle(col_quandle);
      auto cols = k.colorings(x);
      s.text << cols.size() << "\n";
      s.output = {{"colorings", cols.size()}};
    } else if (ph->parsed()) {
      s.command = "phi";
      qw::KnotDiagram k = s.load_pd(ph_pd);
      qw::FiniteQuandle x = s.load_quandle(ph_quandle);
      qw::Cochain phi = s.load_cochain(ph_cocycle);
      if (ph_components) {
        auto vec = qw::link_component_vector(k, x, phi);
        qw::json arr = qw::json::array();
        for (size_t i = 0; i < vec.size(); ++i) {
          s.text << "component " << i + 1 << ": " << vec[i].show(phi.coeff) << "\n";
          arr.push_back(qw::group_ring_to_json(vec[i], phi.coeff));
        }
        s.output = {{"components", arr}};
      } else if (ph_lopes) {
        auto fam = qw::lopes_family(k, x, phi);
        qw::json arr = qw::json::array();
        s.text << "{ ";
        for (const auto& e : fam) {
          s.text << "[" << phi.coeff.show(e) << "] ";
          arr.push_back(e);
        }
        s.text << "}\n";
        s.output = {{"family", arr}};
      } else {
        auto v = qw::cocycle_invariant(k, x, phi);
        s.text << v.show(phi.coeff) << "\n";
        s.output = qw::group_ring_to_json(v, phi.coeff);
      }
    } else if (pt->parsed()) {
      s.command = "phit";
      qw::KnotDiagram k = s.load_pd(pt_pd);
      qw::FiniteQuandle x = s.load_quandle(pt_quandle);
      qw::Cochain phi = s.load_cochain(pt_cocycle);
      if (!pt_coeff.empty()) {
        CoeffChoice c = parse_coeff(s, pt_coeff);
        if (!c.module || !(*c.module == phi.coeff))
          throw qw::input_error("--coeff does not match the cocycle's coefficients");
      }
      auto v = qw::twisted_cocycle_invariant(k, x, phi);
      s.text << v.show(phi.coeff) << "\n";
      s.output = qw::group_ring_to_json(v, phi.coeff);
    } else if (su->parsed()) {
      s.command = "surface";
      qw::FiniteQuandle x = s.load_quandle(su_quandle);
      qw::Cochain theta = s.load_cochain(su_cocycle);
      auto batches = qw::triples_from_json(s.load_input(su_data));
      bool twisted = su_twisted || theta.twisted;
      auto v = qw::surface_state_sum(batches, x, theta, twisted);
      s.text << v.show(theta.coeff) << "\n";
      s.output = qw::group_ring_to_json(v, theta.coeff);
    } else if (jo->parsed()) {
      s.command = "jones";
      qw::KnotDiagram k = s.load_pd(jo_pd);
      if (jo_mirror) k = k.mirror();
      if (jo_bracket) {
        auto b = qw::bracket(k, jo_loop);
        s.text << b.show("A") << "\n";
        s.output = {{"bracket", b.show("A")}};
      } else if (jo_norm) {
        auto b = qw::normalized_bracket(k);
        s.text << b.show("A") << "\n";
        s.output = {{"normalized", b.show("A")}};
      } else {
        auto v = qw::jones(k);
        s.text << qw::jones_to_string(v) << "\n";
        s.output = {{"jones", qw::jones_to_string(v)}};
      }
    } else if (cy->parsed()) {
      s.command = "cycles";
      if (cyc->parsed()) {
        qw::FormalChain ch = qw::chain_from_json(s.load_input(cy_chain));
        qw::FiniteQuandle x = s.load_quandle(cy_quandle);
        auto chk = qw::is_cycle(ch, x);
        s.text << (chk.ok ? "cycle" : "not a cycle, boundary " + chk.boundary.show()) << "\n";
        s.output = {{"cycle", chk.ok}, {"boundary", chk.boundary.show()}};
      } else if (cyb->parsed()) {
        qw::FormalChain ch = qw::chain_from_json(s.load_input(cy_chain));
        qw::FiniteQuandle x = s.load_quandle(cy_quandle);
        long q = cy_coeff == "Z" ? 0 : std::stol(cy_coeff.substr(1));
        auto w = qw::is_null_homologous(ch, x, q);
        if (w) {
          s.text << "bounds: " << w->show() << "\n";
          s.output = {{"bounds", true}, {"witness", qw::chain_to_json(*w)}};
        } else {
          s.text << "not null-homologous\n";
          s.output = {{"bounds", false}};
        }
      } else if (cyp->parsed()) {
        qw::FormalChain ch = qw::chain_from_json(s.load_input(cy_chain));
        qw::Cochain f = s.load_cochain(cy_cochain);
        auto v = qw::kronecker_pairing(f, ch);
        s.text << f.coeff.show(v) << "\n";
        s.output = {{"pairing", v}};
      } else {
        throw qw::input_error("cycles needs a subcommand: check, bound or pair");
      }
    } else if (re->parsed()) {
      s.command = "reproduce";
      auto results = qw::run_reproduction_suite(re_data);
      qw::json arr = qw::json::array();
      bool all = true;
      for (const auto& r : results) {
        s.text << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " ("
               << static_cast<long>(r.wall_ms) << "ms)\n";
        arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all = all && r.pass;
      }
      s.text << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
      s.output = {{"items", arr}, {"pass", all}};
      if (!all) exit_code = 1;
    }
  } catch (const qw::size_error& e) {
    std::cerr << "size error: " << e.what() << "\n";
    return 3;
  } catch (const qw::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }

  double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (s.as_json) {
    qw::json manifest = {{"command", s.command},
                         {"version", kVersion},
                         {"inputs", s.input_digests},
                         {"wall_ms", wall_ms},
                         {"output", s.output}};
    std::cout << manifest.dump(1) << "\n";
  } else {
    std::cout << s.text.str();
  }
  return exit_code;
}
