#pragma once

// Abstract simplicial complexes, pseudomanifold validation, orientation,
// barycentric subdivision and the color bookkeeping on top simplices.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "realizer/bits.hpp"

namespace realizer {

/// Strictly increasing list of vertex ids.
using Simplex = std::vector<int>;

/// Pure n-dimensional complex given by its top simplices. Each simplex is
/// stored sorted; the order of the list is kept as given.
class AbstractComplex {
 public:
  AbstractComplex() = default;
  /// Throws InvalidComplex when a simplex has the wrong size, repeats a
  /// vertex, references a missing vertex, or appears twice.
  AbstractComplex(int n, int num_vertices, std::vector<Simplex> top);

  int dim() const { return n_; }
  int num_vertices() const { return num_vertices_; }
  std::size_t size() const { return top_.size(); }
  const std::vector<Simplex>& top() const { return top_; }
  const Simplex& operator[](std::size_t i) const { return top_[i]; }

 private:
  int n_ = 0;
  int num_vertices_ = 0;
  std::vector<Simplex> top_;
};

/// The simplex with the vertex at position `pos` removed.
Simplex drop_vertex(const Simplex& s, std::size_t pos);

/// Where a top simplex meets its neighbour across a facet.
struct FacetNeighbor {
  int simplex = -1;  // -1 when the facet has no unique partner
  int position = -1; // position of the vertex of `simplex` opposite the facet
};

/// neighbor[s][i] is the top simplex across the facet of s omitting vertex i.
struct DualGraph {
  std::vector<std::vector<FacetNeighbor>> neighbor;
};

DualGraph dual_graph(const AbstractComplex& c);

/// Connected-component label per top simplex of the facet-dual graph,
/// numbered in order of the smallest simplex index of each component.
std::vector<int> dual_components(const AbstractComplex& c, const DualGraph& g);

struct ValidationReport {
  std::vector<Simplex> boundary_faces;   // (n-1)-faces with one coface
  std::vector<Simplex> branching_faces;  // (n-1)-faces with three or more
  int components = 0;

  bool closed() const { return boundary_faces.empty() && branching_faces.empty(); }
  bool strongly_connected() const { return components == 1; }
  bool valid() const { return closed() && strongly_connected(); }
  std::string summary() const;
};

ValidationReport validate_pseudomanifold(const AbstractComplex& c);

/// Color per vertex, 0-based.
using Coloring = std::vector<int>;

struct Subdivision {
  AbstractComplex complex;
  Coloring coloring;         // face dimension, 0-based
  std::vector<Simplex> faces; // vertex id of the subdivision -> face of the input
  /// Top simplex i of the subdivision lies in top simplex parent[i] of the input,
  /// and flag_order[i] lists the vertices of that parent in the order the flag
  /// adds them.
  std::vector<int> parent;
  std::vector<std::vector<int>> flag_order;
};

/// Vertices are the nonempty faces (ordered by dimension, then
/// lexicographically); top simplices are complete flags.
Subdivision barycentric_subdivide(const AbstractComplex& c);

/// True iff the coloring is total, uses colors in [0, n], and every top simplex
/// carries all n+1 colors (which makes it regular on edges).
bool check_regular_coloring(const AbstractComplex& c, const Coloring& col);

/// +1 / -1 per top simplex.
using Bipartition = std::vector<int>;

/// Two-colors the facet-dual graph; the lexicographically smallest top simplex
/// of each component is +1. Throws OddCycle.
Bipartition bipartition(const AbstractComplex& c);

/// Sign per top simplex relative to its sorted vertex order.
using Orientation = std::vector<int>;

/// Coherent orientation by sign propagation over the dual graph. Each
/// component's smallest simplex gets +1. Throws NonOrientable.
Orientation orient(const AbstractComplex& c);
Orientation orient(const AbstractComplex& c, const DualGraph& g);

/// Adjacent simplices induce opposite orientations on every shared facet.
bool is_coherent(const AbstractComplex& c, const Orientation& o);

/// Orientation of the subdivision induced by an orientation of the input.
Orientation subdivision_orientation(const Subdivision& sd, const Orientation& parent_orientation);

/// Set of colors on the vertices of `s`.
ColorSet mu(const Simplex& s, const Coloring& col);

/// Closed, strongly connected, regularly colored, bipartitioned and oriented
/// pseudomanifold, together with its barycentric subdivision Z'.
class ColoredPseudomanifold {
 public:
  /// Validates the input. A supplied coloring is used if it is regular,
  /// otherwise the input is replaced by its barycentric subdivision.
  /// A supplied orientation must be coherent; without one the input is
  /// oriented by propagation (before coloring). The orientation of the
  /// colored complex is induced from the input's. Throws InvalidComplex,
  /// NonOrientable, OddCycle.
  static ColoredPseudomanifold prepare(const AbstractComplex& input,
                                       std::optional<Coloring> coloring = std::nullopt,
                                       std::optional<Orientation> orientation = std::nullopt);

  int dim() const { return complex_.dim(); }
  std::size_t num_top() const { return complex_.size(); }
  bool subdivided() const { return subdivided_; }
  const AbstractComplex& complex() const { return complex_; }
  const Coloring& coloring() const { return coloring_; }
  const Bipartition& parts() const { return parts_; }
  const Orientation& orientation() const { return orientation_; }
  const DualGraph& dual() const { return dual_; }

  /// Z' and its orientation induced from Z.
  const Subdivision& subdivision() const { return sd_; }
  const Orientation& subdivision_orientation() const { return sd_orientation_; }

  ColorSet mu(int sigma) const;
  int vertex_of_color(int sigma, int color) const { return by_color_[sigma][color]; }
  /// The face of top simplex sigma whose vertex colors are exactly omega.
  Simplex face_of_colors(int sigma, ColorSet omega) const;
  /// The vertex of Z' that is the barycenter of face_of_colors(sigma, omega).
  int b_of(int sigma, ColorSet omega) const;
  /// Colors c for which sigma and tau contain the same c-colored vertex.
  ColorSet agreement(int sigma, int tau) const;

 private:
  AbstractComplex complex_;
  Coloring coloring_;
  Bipartition parts_;
  Orientation orientation_;
  DualGraph dual_;
  bool subdivided_ = false;
  std::vector<std::vector<int>> by_color_;
  Subdivision sd_;
  Orientation sd_orientation_;
  std::unordered_map<Simplex, int, VectorHash> face_id_;
};

}  // namespace realizer
