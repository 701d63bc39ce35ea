#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace realizer {

/// A set of colors. Colors are 0-based internally (color c is bit c); the
/// user-facing notation is 1-based, so bit 0 prints as "1".
struct ColorSet {
  std::uint32_t bits = 0;

  static constexpr ColorSet full(int n) { return {(1u << (n + 1)) - 1u}; }
  static constexpr ColorSet single(int c) { return {1u << c}; }
  static ColorSet of(std::initializer_list<int> colors);

  constexpr bool contains(int c) const { return (bits >> c) & 1u; }
  constexpr bool subset_of(ColorSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool proper_subset_of(ColorSet o) const { return subset_of(o) && bits != o.bits; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  /// Smallest color in the set; undefined for the empty set.
  constexpr int lowest() const { return std::countr_zero(bits); }
  std::vector<int> elements() const;

  constexpr ColorSet operator|(ColorSet o) const { return {bits | o.bits}; }
  constexpr ColorSet operator&(ColorSet o) const { return {bits & o.bits}; }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;
};

/// Size first, then lexicographic on the sorted element lists.
bool subset_order_less(ColorSet a, ColorSet b);

/// "{1,3}" in 1-based notation.
std::string to_string(ColorSet s);

/// Element of the elementary abelian group Z_2^n; bit i-1 is the generator e_i.
struct GroupElem {
  std::uint32_t bits = 0;

  static constexpr GroupElem generator(int i) { return {1u << (i - 1)}; }
  constexpr GroupElem operator*(GroupElem o) const { return {bits ^ o.bits}; }
  friend constexpr bool operator==(GroupElem, GroupElem) = default;
  friend constexpr auto operator<=>(GroupElem, GroupElem) = default;
};

/// The homomorphism Z_2^n -> {+1,-1} sending every generator to -1.
constexpr int eta(GroupElem g) { return (std::popcount(g.bits) % 2 == 0) ? 1 : -1; }

/// Sign of the permutation that sorts `seq` (entries must be distinct).
int sort_sign(const std::vector<int>& seq);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct VectorHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const {
    std::size_t h = v.size();
    for (const T& x : v) h = hash_combine(h, std::hash<T>{}(x));
    return h;
  }
};

}  // namespace realizer
