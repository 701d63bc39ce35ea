#pragma once

// The realization map f from the triangulated cover K onto the barycentric
// subdivision Z' of the pseudomanifold, and its degree.

#include <cstdint>
#include <vector>

#include "realizer/covering.hpp"
#include "realizer/permutahedron.hpp"
#include "realizer/pseudomanifold.hpp"
#include "realizer/tomei.hpp"

namespace realizer {

/// Vertex of Z' that the barycenter of face `c` of cell sigma goes to: the
/// barycenter of the face of sigma colored by the smallest subset of c, or of
/// sigma itself when c is empty.
int f_vertex(const ColoredPseudomanifold& z, int sigma, const Chain& c);

struct SimplicialMap {
  std::vector<int> vertex_image;  // vertex of K -> vertex of Z'
};

/// Evaluates f on every (cell, face) pair and checks it is constant on each
/// vertex class of K (NotWellDefined otherwise), and that every top simplex
/// of K lands on a simplex of Z' (a nested family of faces of one simplex).
SimplicialMap build_f(const ColoredPseudomanifold& z, const CoverComplex& cover, const CellTriangulation& k);

struct DegreeReport {
  long degree = 0;                        // signed preimage count, the same over every top simplex of Z'
  std::vector<long> signed_count;         // per top simplex of Z'
  std::vector<long> unsigned_count;       // nondegenerate preimages per top simplex of Z'
  std::vector<long> component_degrees;    // per connected component of K
  std::size_t nondegenerate = 0;
  std::size_t degenerate = 0;
  bool fiber_matches_cells = false;       // unsigned count over tau = cells over tau's parent simplex
  Orientation k_orientation;              // coherent, normalized so every component has positive degree
  std::uint64_t checksum = 0;             // FNV-1a of signed_count
};

/// Orients K coherently per component (positive degree on each), then
/// counts signed preimages over Z' with its orientation induced from Z.
/// Throws DegreeNotConstant with two witness simplices, NonOrientable if K is not orientable.
DegreeReport degree(const ColoredPseudomanifold& z, const CoverComplex& cover, const CellTriangulation& k,
                    const SimplicialMap& f);

}  // namespace realizer
