#pragma once

// Combinatorial model of the permutahedron of dimension n. Facets are indexed
// by the nonempty proper subsets of the colors {0..n}; a face is a chain of
// strictly nested subsets (the facets containing it), the empty chain being
// the polytope itself.

#include <unordered_map>
#include <vector>

#include "realizer/bits.hpp"
#include "realizer/pseudomanifold.hpp"

namespace realizer {

/// Strictly increasing under inclusion; may be empty.
using Chain = std::vector<ColorSet>;

/// Nonempty proper subsets of {0..n}, in size-then-lexicographic order.
std::vector<ColorSet> proper_subsets(int n);

/// Facets meet iff one subset contains the other.
bool facets_intersect(ColorSet a, ColorSet b);

bool is_chain(const Chain& c, int n);

/// Element-wise comparison under subset_order_less, shorter prefix first.
bool chain_less(const Chain& a, const Chain& b);

/// All chains of length `codim`, sorted by chain_less.
std::vector<Chain> enumerate_faces(int n, int codim);

/// Faces containing c: its subchains, c included.
std::vector<Chain> containing_faces(const Chain& c);
/// Faces contained in c: chains having c as a subchain, c included.
std::vector<Chain> contained_faces(const Chain& c, int n);

std::string to_string(const Chain& c);

/// The face lattice with dense ids, flags and subset indices.
class Permutahedron {
 public:
  explicit Permutahedron(int n);

  int dim() const { return n_; }
  /// Faces ordered by codimension, then chain_less. Face 0 is the polytope.
  const std::vector<Chain>& faces() const { return faces_; }
  int face_id(const Chain& c) const { return face_id_.at(key(c)); }
  int codim(int face) const { return static_cast<int>(faces_[face].size()); }
  std::size_t num_faces_of_codim(int k) const;

  const std::vector<ColorSet>& subsets() const { return subsets_; }
  int subset_index(ColorSet s) const { return subset_index_.at(s.bits); }
  /// Subset indices of the facets containing `face`.
  const std::vector<int>& facet_indices(int face) const { return facet_indices_[face]; }

  /// Complete flags: flag[k] is a face of codimension k, each contained in the
  /// previous one. Sorted by vertex chain, then by the order subsets are added.
  const std::vector<std::vector<int>>& flags() const { return flags_; }

 private:
  static std::vector<std::uint32_t> key(const Chain& c);

  int n_;
  std::vector<Chain> faces_;
  std::unordered_map<std::vector<std::uint32_t>, int, VectorHash> face_id_;
  std::vector<ColorSet> subsets_;
  std::unordered_map<std::uint32_t, int> subset_index_;
  std::vector<std::vector<int>> facet_indices_;
  std::vector<std::vector<int>> flags_;
};

/// Order complex of the face poset: vertex i is face i, top simplices are the flags.
AbstractComplex barycentric_triangulation(const Permutahedron& p);

}  // namespace realizer
