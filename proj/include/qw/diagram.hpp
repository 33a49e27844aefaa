#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qw/common.hpp"
#include "qw/modpoly.hpp"
#include "qw/quandle.hpp"
#include "qw/snf.hpp"

namespace qw {

// Oriented link diagram from a PD code. Crossing quadruples list the incoming
// under-edge first, then continue counterclockwise; slots 0/2 carry the
// under-strand, slots 1/3 the over-strand. A crossing is positive when the
// over-strand enters at slot 3.
class KnotDiagram {
 public:
  struct Crossing {
    std::array<int, 4> e;  // internal edge ids by slot
    bool over_in_d = true; // over-strand enters at slot 3
    int sign = 1;
    int alex = 0;          // Alexander number of the source region
  };

  static KnotDiagram parse_pd(const std::string& text);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return edge_count_; }
  int arc_count() const { return arc_count_; }
  int component_count() const { return component_count_; }
  int face_count() const { return face_count_; }
  bool connected() const { return connected_; }
  int writhe() const;

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int edge_arc(int e) const { return edge_arc_[e]; }
  int edge_component(int e) const { return edge_comp_[e]; }
  long long edge_label(int e) const { return edge_label_[e]; }
  int unbounded_face() const { return unbounded_face_; }
  int face_alex(int f) const { return face_alex_[f]; }
  int dart_face(int dart) const { return dart_face_[dart]; }
  int edge_head_dart(int e) const { return edge_head_dart_[e]; }
  int edge_tail_dart(int e) const { return edge_tail_dart_[e]; }

  // crossing-incident arcs: under-in, over, under-out, plus the component of
  // the under-strand
  struct CrossingArcs {
    int under_in, over, under_out;
    int sign;
    int alex;
    int under_component;
  };
  CrossingArcs crossing_arcs(int tau) const;

  // All quandle colorings as arc -> element maps, lexicographically sorted.
  std::vector<std::vector<int>> colorings(const FiniteQuandle& x) const;

  // source colors (x, y) entering the Boltzmann weight of a crossing:
  // x on the under-arc away from which the over-normal points, y on the over-arc
  std::pair<int, int> weight_colors(int tau, const std::vector<int>& coloring) const;

  KnotDiagram mirror() const;

 private:
  KnotDiagram() = default;
  void build(const std::vector<std::array<long long, 4>>& quads,
             const std::map<std::string, std::string>& headers);

  std::vector<Crossing> crossings_;
  int edge_count_ = 0;
  int arc_count_ = 0;
  int component_count_ = 0;
  int face_count_ = 0;
  bool connected_ = true;
  bool zero_crossing_ = false;
  std::vector<long long> edge_label_;
  std::vector<int> edge_arc_;
  std::vector<int> edge_comp_;
  std::vector<int> edge_head_dart_, edge_tail_dart_;
  std::vector<int> dart_face_;
  std::vector<int> face_alex_;
  int unbounded_face_ = 0;
};

// Number of colorings by the Alexander quandle Z_q[T]/J, J given by one or
// more generator polynomials (constant term first). A single generator works
// over any q >= 2; several generators need q prime (the ideal is reduced to
// its gcd). Must agree with enumeration by colorings().
Int alexander_coloring_count(const KnotDiagram& k, long q,
                             std::vector<std::vector<long>> ideal_gens);

}  // namespace qw
