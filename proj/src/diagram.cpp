#include "qw/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qw {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

KnotDiagram KnotDiagram::parse_pd(const std::string& text) {
  std::vector<std::array<long long, 4>> quads;
  std::map<std::string, std::string> headers;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s[0] == 'X' || s[0] == 'x') {
      size_t open = s.find_first_of("([");
      size_t close = s.find_last_of(")]");
      if (open == std::string::npos || close == std::string::npos || close <= open)
        throw input_error("line " + std::to_string(lineno) + ": malformed crossing: " + s);
      std::string body = s.substr(open + 1, close - open - 1);
      for (char& ch : body)
        if (ch == ',') ch = ' ';
      std::istringstream bs(body);
      std::array<long long, 4> q{};
      for (int i = 0; i < 4; ++i)
        if (!(bs >> q[i]))
          throw input_error("line " + std::to_string(lineno) + ": crossing needs 4 labels");
      quads.push_back(q);
    } else {
      size_t colon = s.find(':');
      if (colon == std::string::npos)
        throw input_error("line " + std::to_string(lineno) + ": unrecognized line: " + s);
      headers[trim(s.substr(0, colon))] = trim(s.substr(colon + 1));
    }
  }
  KnotDiagram k;
  k.build(quads, headers);
  return k;
}

void KnotDiagram::build(const std::vector<std::array<long long, 4>>& quads,
                        const std::map<std::string, std::string>& headers) {
  int c = static_cast<int>(quads.size());
  bool allow_disconnected = false;
  if (auto it = headers.find("allow-disconnected"); it != headers.end())
    allow_disconnected = (it->second == "true" || it->second == "1" || it->second == "yes");

  if (c == 0) {
    zero_crossing_ = true;
    component_count_ = 1;
    if (auto it = headers.find("components"); it != headers.end()) {
      component_count_ = std::stoi(it->second);
      if (component_count_ < 1) throw input_error("components must be >= 1");
    }
    arc_count_ = component_count_;
    edge_count_ = 0;
    face_count_ = 1 + component_count_;
    face_alex_.assign(face_count_, 0);
    connected_ = component_count_ == 1;
    return;
  }

  // dense edge ids, labels sorted ascending
  std::vector<long long> labels;
  for (const auto& q : quads)
    for (long long v : q) labels.push_back(v);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::map<long long, int> id_of;
  for (size_t i = 0; i < labels.size(); ++i) id_of[labels[i]] = static_cast<int>(i);
  edge_count_ = static_cast<int>(labels.size());
  edge_label_ = labels;

  crossings_.resize(c);
  std::vector<std::vector<int>> edge_darts(edge_count_);
  for (int i = 0; i < c; ++i) {
    for (int s = 0; s < 4; ++s) {
      int e = id_of[quads[i][s]];
      crossings_[i].e[s] = e;
      edge_darts[e].push_back(4 * i + s);
    }
  }
  for (int e = 0; e < edge_count_; ++e)
    if (edge_darts[e].size() != 2)
      throw input_error("edge " + std::to_string(edge_label_[e]) + " appears " +
                        std::to_string(edge_darts[e].size()) + " times, expected 2");
  if (2 * c != edge_count_)
    throw input_error("a diagram with " + std::to_string(c) + " crossings needs " +
                      std::to_string(2 * c) + " edges");

  // connectivity of the underlying 4-valent graph
  {
    UnionFind uf(c);
    for (int e = 0; e < edge_count_; ++e)
      uf.unite(edge_darts[e][0] / 4, edge_darts[e][1] / 4);
    int root = uf.find(0);
    for (int i = 1; i < c; ++i)
      if (uf.find(i) != root) {
        if (!allow_disconnected)
          throw input_error("disconnected diagram (set 'allow-disconnected: true' to accept)");
        connected_ = false;
      }
  }

  // orientation: over_in_d per crossing, propagated from under-strand slots.
  // head = the edge points into the crossing at this dart.
  auto head_given = [&](int slot, bool over_in_d) {
    switch (slot) {
      case 0: return true;
      case 2: return false;
      case 1: return !over_in_d;
      default: return over_in_d;
    }
  };
  std::vector<int> assigned(c, -1);  // -1 unknown, else 0/1 = over_in_d
  // explicit overrides: "orient: a->b" means the over-strand runs edge a to edge b
  if (auto it = headers.find("orient"); it != headers.end()) {
    std::istringstream os(it->second);
    std::string tok;
    while (os >> tok) {
      size_t arrow = tok.find("->");
      if (arrow == std::string::npos) throw input_error("orient entries look like a->b");
      long long la = std::stoll(tok.substr(0, arrow));
      long long lb = std::stoll(tok.substr(arrow + 2));
      if (!id_of.count(la) || !id_of.count(lb)) throw input_error("orient names unknown edges");
      int ea = id_of[la], eb = id_of[lb];
      bool found = false;
      for (int i = 0; i < c; ++i) {
        int b = crossings_[i].e[1], d = crossings_[i].e[3];
        if ((b == ea && d == eb) || (b == eb && d == ea)) {
          assigned[i] = (d == ea) ? 1 : 0;  // incoming over-edge sits at slot d or b
          found = true;
        }
      }
      if (!found) throw input_error("orient pair is not an over-strand at any crossing");
    }
  }

  // Each edge ties its two endpoints: exactly one is a head. Under slots are
  // fixed (0 head, 2 tail); over slots depend on the crossing's over_in_d bit,
  // with head(slot1) = !over_in_d and head(slot3) = over_in_d. This yields
  // direct forcings and parity constraints between crossings.
  auto force = [&](int i, int v) {
    if (assigned[i] < 0)
      assigned[i] = v;
    else if (assigned[i] != v)
      throw input_error("inconsistent strand orientation in PD code");
  };
  std::vector<std::vector<std::pair<int, int>>> parity(c);  // (other crossing, xor)
  for (int e = 0; e < edge_count_; ++e) {
    int d1 = edge_darts[e][0], d2 = edge_darts[e][1];
    int c1 = d1 / 4, s1 = d1 % 4, c2 = d2 / 4, s2 = d2 % 4;
    bool u1 = (s1 == 0 || s1 == 2), u2 = (s2 == 0 || s2 == 2);
    if (u1 && u2) {
      if ((s1 == 0) == (s2 == 0))
        throw input_error("edge " + std::to_string(edge_label_[e]) +
                          " enters (or leaves) the under-strand twice");
    } else if (u1 || u2) {
      if (u2) {
        std::swap(c1, c2);
        std::swap(s1, s2);
      }
      // head(s2, x) must be the opposite of the fixed head(s1)
      bool other_head = (s1 != 0);
      force(c2, (s2 == 3) == other_head ? 1 : 0);
    } else {
      int x = 1 ^ (s1 == 1 ? 1 : 0) ^ (s2 == 1 ? 1 : 0);
      parity[c1].push_back({c2, x});
      parity[c2].push_back({c1, x});
    }
  }
  auto propagate_parity = [&](int start) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (auto [j, x] : parity[i]) {
        int want = assigned[i] ^ x;
        if (assigned[j] < 0) {
          assigned[j] = want;
          stack.push_back(j);
        } else if (assigned[j] != want) {
          throw input_error("inconsistent strand orientation in PD code");
        }
      }
    }
  };
  for (int i = 0; i < c; ++i)
    if (assigned[i] >= 0) propagate_parity(i);
  for (int i = 0; i < c; ++i)
    if (assigned[i] < 0) {
      // a component never forced by an under-strand: free choice, the orient
      // header is the way to pin it
      assigned[i] = 1;
      propagate_parity(i);
    }
  for (int i = 0; i < c; ++i) {
    crossings_[i].over_in_d = assigned[i] == 1;
    crossings_[i].sign = crossings_[i].over_in_d ? 1 : -1;
  }
  // final consistency: every edge has exactly one head endpoint
  edge_head_dart_.assign(edge_count_, -1);
  edge_tail_dart_.assign(edge_count_, -1);
  for (int e = 0; e < edge_count_; ++e) {
    for (int d : edge_darts[e]) {
      bool h = head_given(d % 4, crossings_[d / 4].over_in_d);
      (h ? edge_head_dart_ : edge_tail_dart_)[e] = d;
    }
    if (edge_head_dart_[e] < 0 || edge_tail_dart_[e] < 0)
      throw input_error("inconsistent strand orientation in PD code (edge " +
                        std::to_string(edge_label_[e]) + ")");
  }

  // components: successor along each strand
  {
    std::vector<int> succ(edge_count_);
    for (int e = 0; e < edge_count_; ++e) {
      int d = edge_head_dart_[e];
      int i = d / 4, s = d % 4;
      int out_slot = (s == 0) ? 2 : (s == 1 ? 3 : (s == 3 ? 1 : -1));
      if (out_slot < 0) throw std::logic_error("head dart at an outgoing slot");
      succ[e] = crossings_[i].e[out_slot];
    }
    edge_comp_.assign(edge_count_, -1);
    component_count_ = 0;
    for (int e = 0; e < edge_count_; ++e) {
      if (edge_comp_[e] >= 0) continue;
      int cur = e;
      while (edge_comp_[cur] < 0) {
        edge_comp_[cur] = component_count_;
        cur = succ[cur];
      }
      ++component_count_;
    }
  }

  // arcs: over-strand keeps its arc through a crossing
  {
    UnionFind uf(edge_count_);
    for (int i = 0; i < c; ++i) uf.unite(crossings_[i].e[1], crossings_[i].e[3]);
    std::map<int, int> arc_id;
    edge_arc_.assign(edge_count_, -1);
    for (int e = 0; e < edge_count_; ++e) {
      int r = uf.find(e);
      auto [it, fresh] = arc_id.try_emplace(r, static_cast<int>(arc_id.size()));
      edge_arc_[e] = it->second;
    }
    arc_count_ = static_cast<int>(arc_id.size());
  }

  if (!connected_) return;  // faces and Alexander numbers need a connected diagram

  // faces: orbits of dart -> sigma(alpha(dart)), sigma = +1 slot rotation
  {
    std::vector<int> alpha(4 * c);
    for (int e = 0; e < edge_count_; ++e) {
      alpha[edge_darts[e][0]] = edge_darts[e][1];
      alpha[edge_darts[e][1]] = edge_darts[e][0];
    }
    dart_face_.assign(4 * c, -1);
    face_count_ = 0;
    for (int d0 = 0; d0 < 4 * c; ++d0) {
      if (dart_face_[d0] >= 0) continue;
      int d = d0;
      while (dart_face_[d] < 0) {
        dart_face_[d] = face_count_;
        int a = alpha[d];
        d = 4 * (a / 4) + (a % 4 + 1) % 4;
      }
      ++face_count_;
    }
    if (face_count_ != c + 2)
      throw input_error("PD code is not planar: " + std::to_string(c) + " crossings give " +
                        std::to_string(face_count_) + " faces, expected " +
                        std::to_string(c + 2));
  }

  // unbounded face: explicit header, else the right side of the highest edge.
  // The face left of a directed edge contains its head dart; the right side
  // contains its tail dart.
  unbounded_face_ = dart_face_[edge_tail_dart_[edge_count_ - 1]];
  if (auto it = headers.find("unbounded_face"); it != headers.end()) {
    std::string v = it->second;
    if (v.size() < 4 || v[0] != 'e' || (v.back() != 'L' && v.back() != 'R') ||
        v[v.size() - 2] != ':')
      throw input_error("unbounded_face looks like e<edge>:L or e<edge>:R");
    long long lab = std::stoll(v.substr(1, v.size() - 3));
    if (!id_of.count(lab)) throw input_error("unbounded_face names an unknown edge");
    int e = id_of[lab];
    unbounded_face_ = dart_face_[v.back() == 'L' ? edge_head_dart_[e] : edge_tail_dart_[e]];
  }

  // Alexander numbering: crossing an edge along its normal (toward its left
  // side) raises the number by one; the unbounded face carries 0.
  {
    face_alex_.assign(face_count_, 0);
    std::vector<char> done(face_count_, 0);
    done[unbounded_face_] = 1;
    std::vector<int> queue{unbounded_face_};
    std::vector<std::vector<std::pair<int, int>>> adj(face_count_);  // (other, delta)
    for (int e = 0; e < edge_count_; ++e) {
      int fl = dart_face_[edge_head_dart_[e]];
      int fr = dart_face_[edge_tail_dart_[e]];
      adj[fr].push_back({fl, 1});
      adj[fl].push_back({fr, -1});
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int f = queue[qi];
      for (auto [g, d] : adj[f]) {
        if (!done[g]) {
          face_alex_[g] = face_alex_[f] + d;
          done[g] = 1;
          queue.push_back(g);
        } else if (face_alex_[g] != face_alex_[f] + d) {
          throw std::logic_error("Alexander numbering is inconsistent");
        }
      }
    }
    for (int f = 0; f < face_count_; ++f)
      if (!done[f]) throw std::logic_error("face graph is disconnected");
  }

  // source region: the corner between slots 0,1 (positive) or 1,2 (negative);
  // the corner between slots s,s+1 lies in the face of dart s+1
  for (int i = 0; i < c; ++i)
    crossings_[i].alex = face_alex_[dart_face_[4 * i + (crossings_[i].sign > 0 ? 1 : 2)]];
}

int KnotDiagram::writhe() const {
  int w = 0;
  for (const auto& cr : crossings_) w += cr.sign;
  return w;
}

KnotDiagram::CrossingArcs KnotDiagram::crossing_arcs(int tau) const {
  const Crossing& cr = crossings_[tau];
  return CrossingArcs{edge_arc_[cr.e[0]], edge_arc_[cr.e[1]], edge_arc_[cr.e[2]],
                      cr.sign, cr.alex, edge_comp_[cr.e[0]]};
}

std::pair<int, int> KnotDiagram::weight_colors(int tau, const std::vector<int>& col) const {
  CrossingArcs a = crossing_arcs(tau);
  int x = a.sign > 0 ? col[a.under_in] : col[a.under_out];
  return {x, col[a.over]};
}

std::vector<std::vector<int>> KnotDiagram::colorings(const FiniteQuandle& x) const {
  std::vector<std::vector<int>> out;
  int n = x.size();
  if (zero_crossing_ || crossings_.empty()) {
    std::vector<int> col(arc_count_, 0);
    for (;;) {
      out.push_back(col);
      int i = arc_count_ - 1;
      while (i >= 0 && col[i] == n - 1) col[i--] = 0;
      if (i < 0) break;
      ++col[i];
    }
    return out;
  }

  struct Rel {
    int in, over, out, sign;
  };
  std::vector<Rel> rels;
  std::vector<std::vector<int>> arc_rels(arc_count_);
  for (int t = 0; t < crossing_count(); ++t) {
    CrossingArcs a = crossing_arcs(t);
    rels.push_back({a.under_in, a.over, a.under_out, a.sign});
    for (int arc : {a.under_in, a.over, a.under_out})
      arc_rels[arc].push_back(static_cast<int>(rels.size()) - 1);
  }

  std::vector<int> col(arc_count_, -1);
  std::vector<int> trail;
  auto set_color = [&](int arc, int v, auto&& propagate_ref) -> bool {
    if (col[arc] >= 0) return col[arc] == v;
    col[arc] = v;
    trail.push_back(arc);
    return propagate_ref(arc, propagate_ref);
  };
  auto propagate = [&](int arc, auto&& self) -> bool {
    for (int ri : arc_rels[arc]) {
      const Rel& r = rels[ri];
      // out = in * over at positive crossings, in = out * over at negative ones
      int u = r.sign > 0 ? r.in : r.out;
      int v = r.sign > 0 ? r.out : r.in;
      if (col[u] >= 0 && col[r.over] >= 0) {
        if (!set_color(v, x.op(col[u], col[r.over]), self)) return false;
      } else if (col[v] >= 0 && col[r.over] >= 0) {
        if (!set_color(u, x.op_inv(col[v], col[r.over]), self)) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int from) -> void {
    int arc = -1;
    for (int a = from; a < arc_count_; ++a)
      if (col[a] < 0) {
        arc = a;
        break;
      }
    if (arc < 0) {
      for (const Rel& r : rels) {
        int u = r.sign > 0 ? r.in : r.out;
        int v = r.sign > 0 ? r.out : r.in;
        if (x.op(col[u], col[r.over]) != col[v]) return;  // unreachable safety net
      }
      out.push_back(col);
      return;
    }
    for (int v = 0; v < n; ++v) {
      size_t mark = trail.size();
      if (set_color(arc, v, propagate)) self(self, arc + 1);
      while (trail.size() > mark) {
        col[trail.back()] = -1;
        trail.pop_back();
      }
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

KnotDiagram KnotDiagram::mirror() const {
  std::vector<std::array<long long, 4>> quads;
  for (const auto& cr : crossings_)
    quads.push_back({edge_label_[cr.e[0]], edge_label_[cr.e[3]], edge_label_[cr.e[2]],
                     edge_label_[cr.e[1]]});
  KnotDiagram k;
  std::map<std::string, std::string> headers;
  if (zero_crossing_) headers["components"] = std::to_string(component_count_);
  k.build(quads, headers);
  return k;
}

Int alexander_coloring_count(const KnotDiagram& k, long q,
                             std::vector<std::vector<long>> ideal_gens) {
  if (q < 2) throw input_error("modulus must be >= 2");
  // normalize generators: reduce mod q, strip T factors and trailing zeros
  std::vector<std::vector<long>> gens;
  for (auto g : ideal_gens) {
    for (long& cc : g) cc = mod_norm(cc, q);
    while (!g.empty() && g.back() == 0) g.pop_back();
    size_t shift = 0;
    while (shift < g.size() && g[shift] == 0) ++shift;
    g.erase(g.begin(), g.begin() + shift);
    if (!g.empty()) gens.push_back(g);
  }
  if (gens.empty()) throw input_error("zero ideal gives an infinite module, unsupported");

  std::vector<long> h;
  if (gens.size() == 1) {
    h = gens[0];
  } else {
    // several generators: reduce to the gcd, which needs a prime modulus
    for (long d = 2; d * d <= q; ++d)
      if (q % d == 0) throw input_error("ideals with several generators need a prime modulus");
    auto polymod = [&](std::vector<long> a, const std::vector<long>& b) {
      long lead_inv = mod_inv(b.back(), q);
      while (a.size() >= b.size() && !a.empty()) {
        long f = mod_norm(static_cast<long long>(a.back()) * lead_inv, q);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
          a[off + i] = mod_norm(a[off + i] - static_cast<long long>(f) * b[i], q);
        while (!a.empty() && a.back() == 0) a.pop_back();
      }
      return a;
    };
    h = gens[0];
    for (size_t i = 1; i < gens.size(); ++i) {
      std::vector<long> a = h, b = gens[i];
      while (!b.empty()) {
        auto r = polymod(a, b);
        a = b;
        b = r;
      }
      h = a;
    }
    size_t shift = 0;
    while (shift < h.size() && h[shift] == 0) ++shift;
    h.erase(h.begin(), h.begin() + shift);
  }
  if (h.empty()) throw input_error("zero ideal gives an infinite module, unsupported");
  if (h.size() == 1) return 1;  // unit ideal: the one-element module

  CoefficientModule m = CoefficientModule::alexander(q, h);
  int d = m.dim();
  int arcs = k.arc_count();
  auto tmat = m.t_matrix(1);

  IntMat a(k.crossing_count() * d, arcs * d);
  for (int t = 0; t < k.crossing_count(); ++t) {
    auto ca = k.crossing_arcs(t);
    int u = ca.sign > 0 ? ca.under_in : ca.under_out;
    int v = ca.sign > 0 ? ca.under_out : ca.under_in;
    // T x_u + (1-T) x_over - x_v = 0
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        a.at(t * d + i, u * d + j) += tmat[i][j];
        a.at(t * d + i, ca.over * d + j) += (i == j ? 1 : 0) - tmat[i][j];
        a.at(t * d + i, v * d + j) -= (i == j ? 1 : 0);
      }
  }
  SnfResult s = smith_normal_form(a, false);
  Int count = 1;
  for (const Int& di : s.divisors()) count *= gcd(di, Int(q));
  for (int i = s.rank; i < a.cols(); ++i) count *= q;
  return count;
}

}  // namespace qw
