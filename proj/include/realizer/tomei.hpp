#pragma once

// Complexes of permutahedra glued along facets, their face classes and
// barycentric triangulations, and the Tomei manifold built from 2^n copies.

#include <memory>
#include <string>
#include <vector>

#include "realizer/permutahedron.hpp"
#include "realizer/pseudomanifold.hpp"

namespace realizer {

/// Cells are copies of the permutahedron; facet s of cell a is glued to the
/// same facet of cell glue(a, s), identically on the polytope coordinate.
class PermutahedralComplex {
 public:
  PermutahedralComplex(std::shared_ptr<const Permutahedron> polytope, std::size_t num_cells);

  int dim() const { return polytope_->dim(); }
  const Permutahedron& polytope() const { return *polytope_; }
  std::shared_ptr<const Permutahedron> polytope_ptr() const { return polytope_; }
  std::size_t num_cells() const { return num_cells_; }
  std::size_t num_subsets() const { return polytope_->subsets().size(); }

  /// Sets both directions. Throws InconsistentGluing if either side is already
  /// glued elsewhere.
  void glue(int cell, int subset, int other);
  /// -1 when the facet is free.
  int neighbor(int cell, int subset) const { return glue_[cell * num_subsets() + subset]; }
  bool closed() const;

 private:
  std::shared_ptr<const Permutahedron> polytope_;
  std::size_t num_cells_;
  std::vector<int> glue_;
};

struct FaceClass {
  int cell;   // smallest cell of the orbit
  int face;   // face id in the permutahedron
  int codim;
  int orbit_size;
};

struct FaceClasses {
  std::vector<FaceClass> classes;
  std::vector<int> class_of;          // cell * num_faces + face -> class id
  std::vector<std::size_t> count_by_codim;

  int of(const PermutahedralComplex& pc, int cell, int face) const {
    return class_of[static_cast<std::size_t>(cell) * pc.polytope().faces().size() + face];
  }
};

/// Orbits of (cell, face) under the gluings of the facets containing the
/// face. Class ids follow the scan order (cell, face). Throws
/// InconsistentGluing when nested gluings fail to commute, or when a face of
/// a closed complex has an orbit other than 2^codim cells.
FaceClasses face_classes(const PermutahedralComplex& pc);

struct CellTriangulation {
  AbstractComplex complex;          // vertex ids are face-class ids
  FaceClasses classes;
  std::vector<int> source_cell;     // per top simplex
  std::vector<int> source_flag;     // per top simplex, index into polytope().flags()
};

/// Barycentric triangulation of the cell complex: one top simplex per
/// (cell, flag), in cell-major order.
CellTriangulation triangulate(const PermutahedralComplex& pc);
CellTriangulation triangulate(const PermutahedralComplex& pc, FaceClasses classes);

/// Alternating count of face classes.
long euler_characteristic(const FaceClasses& fc, int n);
/// Alternating count of all simplices of a pure complex.
long euler_characteristic(const AbstractComplex& c);

/// All faces of each dimension, sorted; faces[d] are the d-simplices.
std::vector<std::vector<Simplex>> all_faces(const AbstractComplex& c);

struct SurfaceReport {
  bool ok = false;
  std::string witness;
};

/// Closed surface test: every edge in exactly two triangles and every vertex
/// link a single cycle.
SurfaceReport verify_surface(const AbstractComplex& c);

bool orientable(const PermutahedralComplex& pc);

/// 2^n cells indexed by g in Z_2^n; facet omega of cell g glued to cell
/// g * e_{|omega|}.
PermutahedralComplex build_tomei(int n);

}  // namespace realizer
