#pragma once

// The covering manifold: cells (sigma, involution tuple, g), the facet
// involutions Phi_omega acting on them, component / full constructions and
// the projection onto the Tomei manifold.

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "realizer/bits.hpp"
#include "realizer/involutions.hpp"
#include "realizer/pseudomanifold.hpp"
#include "realizer/tomei.hpp"

namespace realizer {

/// Hash-consed involutions with a memoized conjugation table.
class InvolutionRegistry {
 public:
  int intern(const Involution& lambda);
  const Involution& get(int id) const { return items_[id]; }
  /// Id of a o b o a.
  int conjugate(int a, int b);
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<Involution> items_;
  std::unordered_map<std::vector<int>, int, VectorHash> index_;
  std::unordered_map<std::uint64_t, int> conj_;
};

/// Hash-consed tuples of involution ids, one per facet subset.
class TupleRegistry {
 public:
  /// Second member is true when the tuple was not seen before.
  std::pair<int, bool> intern(const std::vector<int>& tuple);
  const std::vector<int>& get(int id) const { return items_[id]; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<std::vector<int>> items_;
  std::unordered_map<std::vector<int>, int, VectorHash> index_;
};

struct CoverCell {
  int sigma = 0;
  int tuple = 0;
  GroupElem g;

  friend bool operator==(const CoverCell&, const CoverCell&) = default;
};

struct CoverCellHash {
  std::size_t operator()(const CoverCell& c) const {
    return hash_combine(hash_combine(std::hash<int>{}(c.sigma), std::hash<int>{}(c.tuple)), c.g.bits);
  }
};

/// Cell index set V over a colored pseudomanifold. Holds a reference to the
/// pseudomanifold, which must outlive it.
class CoverSpace {
 public:
  explicit CoverSpace(const ColoredPseudomanifold& z);

  const ColoredPseudomanifold& base() const { return *z_; }
  const Permutahedron& polytope() const { return *polytope_; }
  std::shared_ptr<const Permutahedron> polytope_ptr() const { return polytope_; }
  const std::vector<ColorSet>& subsets() const { return polytope_->subsets(); }

  /// One involution per subset, in subsets() order. Throws InvalidCell unless
  /// every entry lies in the P-set of its subset.
  int register_tuple(const std::vector<Involution>& tuple);
  int register_tuple_ids(const std::vector<int>& involution_ids);

  /// The tuple of canonical involutions, registered at construction.
  int canonical_tuple() const { return canonical_tuple_; }
  /// Lexicographically smallest top simplex (in U+), canonical tuple, g = 1.
  CoverCell canonical_seed() const;

  bool in_V(const CoverCell& v) const;
  /// Throws InvalidCell when the parity constraint or an index is violated.
  CoverCell make_cell(int sigma, int tuple, GroupElem g) const;

  /// Phi_omega for omega = subsets()[subset].
  CoverCell phi(int subset, const CoverCell& v);

  const Involution& component(int tuple, int subset) const {
    return involutions_.get(tuples_.get(tuple)[subset]);
  }
  InvolutionRegistry& involutions() { return involutions_; }
  const InvolutionRegistry& involutions() const { return involutions_; }
  const TupleRegistry& tuples() const { return tuples_; }

 private:
  void check_membership(int involution, int subset);

  const ColoredPseudomanifold* z_;
  std::shared_ptr<const Permutahedron> polytope_;
  std::vector<std::vector<int>> subsets_inside_;  // subsets_inside_[w] = {g : g subset of w}
  InvolutionRegistry involutions_;
  TupleRegistry tuples_;
  std::unordered_set<std::uint64_t> verified_;    // (involution, subset) pairs known to be in P
  int canonical_tuple_ = 0;
};

struct CoverComplex {
  PermutahedralComplex pc;
  std::vector<CoverCell> cells;
};

inline constexpr std::size_t kDefaultMaxCells = 1'000'000;

/// Connected component of the seed under the facet involutions, explored
/// breadth-first with subsets in size-then-lexicographic order. Throws
/// InvalidCell for a seed outside V and CapExceeded past max_cells.
CoverComplex build_component(CoverSpace& space, const CoverCell& seed, std::size_t max_cells = kDefaultMaxCells);

/// All of V (every tuple in the product of the P-sets). Throws CapExceeded
/// when |V| > max_cells and Overflow when the P-sets cannot be enumerated
/// under matching_cap.
CoverComplex build_full(CoverSpace& space, std::size_t max_cells = kDefaultMaxCells,
                        std::size_t matching_cap = kDefaultMatchingCap);

/// Splits a cover complex into its connected components, in order of first cell.
std::vector<CoverComplex> split_components(const CoverComplex& cover);

/// The projection on cells: (sigma, tuple, g) -> g, identity on the polytope.
inline GroupElem covering_map(const CoverCell& v) { return v.g; }

struct CoveringReport {
  std::size_t cells = 0;
  std::size_t degree = 0;
  std::size_t face_classes = 0;
};

/// Checks that p intertwines the gluings, maps face classes bijectively onto
/// face classes, and has constant fiber size. Throws NotACovering.
CoveringReport verify_covering(const CoverComplex& cover, const PermutahedralComplex& tomei);

}  // namespace realizer
