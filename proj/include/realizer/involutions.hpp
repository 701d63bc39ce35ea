#pragma once

// Part-swapping fixed-point-free involutions on the top simplices that keep
// every vertex whose color lies in a given set omega.

#include <cstdint>
#include <vector>

#include "realizer/bits.hpp"
#include "realizer/pseudomanifold.hpp"

namespace realizer {

/// image[sigma] for every top simplex sigma.
struct Involution {
  std::vector<int> image;

  int operator()(int sigma) const { return image[sigma]; }
  friend bool operator==(const Involution&, const Involution&) = default;
};

/// sigma and tau contain the same c-colored vertex for every c in omega.
bool compatible(const ColoredPseudomanifold& z, int sigma, int tau, ColorSet omega);

/// Bipartite graph U+ -> U- of compatible pairs; adjacency lists indexed by
/// top simplex (empty for U- entries).
std::vector<std::vector<int>> compatibility_graph(const ColoredPseudomanifold& z, ColorSet omega);

/// omega padded to n colors with the smallest colors missing from it.
ColorSet canonical_extension(ColorSet omega, int n);

/// Pairs each sigma with its neighbour across the facet colored by
/// canonical_extension(omega).
Involution canonical_involution(const ColoredPseudomanifold& z, ColorSet omega);

/// Involutive, fixed-point-free, part-swapping and omega-compatible.
bool is_in_P_omega(const ColoredPseudomanifold& z, const Involution& lambda, ColorSet omega);

/// a o b o a.
Involution conjugate(const Involution& a, const Involution& b);

inline constexpr std::size_t kDefaultMatchingCap = 16;

/// Exact |P_omega| by backtracking over perfect matchings of the
/// compatibility graph. Throws Overflow when the complex has more than `cap`
/// top simplices.
std::uint64_t count_P_omega(const ColoredPseudomanifold& z, ColorSet omega, std::size_t cap = kDefaultMatchingCap);

/// Every element of P_omega, in lexicographic order of the U+ assignments.
/// Same cap as count_P_omega.
std::vector<Involution> enumerate_P_omega(const ColoredPseudomanifold& z, ColorSet omega,
                                          std::size_t cap = kDefaultMatchingCap);

}  // namespace realizer
