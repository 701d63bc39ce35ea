#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "realizer/errors.hpp"
#include "realizer/involutions.hpp"
#include "realizer/permutahedron.hpp"
#include "support.hpp"

using namespace realizer;
using realizer::testing::prepared;

namespace {

// Compatibility recomputed from the vertex lists and the coloring.
bool shares_colors(const ColoredPseudomanifold& z, int s, int t, ColorSet omega) {
  for (int c : omega.elements()) {
    int vs = -1, vt = -1;
    for (int v : z.complex()[s])
      if (z.coloring()[v] == c) vs = v;
    for (int v : z.complex()[t])
      if (z.coloring()[v] == c) vt = v;
    if (vs != vt) return false;
  }
  return true;
}

// Permanent of the U+ x U- compatibility matrix, over all bijections.
std::uint64_t permanent_oracle(const ColoredPseudomanifold& z, ColorSet omega) {
  std::vector<int> plus, minus;
  for (std::size_t s = 0; s < z.num_top(); ++s) (z.parts()[s] > 0 ? plus : minus).push_back(static_cast<int>(s));
  if (plus.size() != minus.size()) return 0;
  std::vector<int> perm(minus.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < plus.size() && ok; ++i) ok = shares_colors(z, plus[i], minus[perm[i]], omega);
    total += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("compatibility on the hexagon") {
  const auto z = prepared("hexagon.json");
  int pairs = 0;
  for (std::size_t s = 0; s < z.num_top(); ++s)
    for (std::size_t t = 0; t < z.num_top(); ++t) {
      if (z.parts()[s] <= 0 || z.parts()[t] >= 0) continue;
      for (int c = 0; c < 2; ++c) {
        const ColorSet w = ColorSet::single(c);
        CHECK(compatible(z, static_cast<int>(s), static_cast<int>(t), w) ==
              shares_colors(z, static_cast<int>(s), static_cast<int>(t), w));
      }
      ++pairs;
    }
  CHECK(pairs == 9);
  CHECK(count_P_omega(z, ColorSet::single(0)) == 1);
  CHECK(count_P_omega(z, ColorSet::single(1)) == 1);
}

TEST_CASE("P-set sizes on the octahedron match the permanent") {
  const auto z = prepared("octahedron.json");
  for (ColorSet w : proper_subsets(2)) {
    CHECK(count_P_omega(z, w) == permanent_oracle(z, w));
    CHECK(count_P_omega(z, w) == (w.size() == 1 ? 4u : 1u));
  }
}

TEST_CASE("canonical involutions lie in their P-sets") {
  for (const char* name : {"hexagon.json", "octahedron.json", "tetra_boundary.json", "cross_polytope4.json"}) {
    const auto z = prepared(name);
    for (ColorSet w : proper_subsets(z.dim())) {
      const auto lambda = canonical_involution(z, w);
      CHECK(is_in_P_omega(z, lambda, w));
      CHECK(w.subset_of(canonical_extension(w, z.dim())));
      CHECK(canonical_extension(w, z.dim()).size() == z.dim());
    }
  }
}

TEST_CASE("canonical extension pads with the smallest missing colors") {
  CHECK(canonical_extension(ColorSet::of({2}), 2) == ColorSet::of({0, 2}));
  CHECK(canonical_extension(ColorSet::of({0}), 3) == ColorSet::of({0, 1, 2}));
  CHECK(canonical_extension(ColorSet::of({1, 3}), 3) == ColorSet::of({0, 1, 3}));
}

TEST_CASE("maps outside the P-sets are rejected") {
  const auto z = prepared("octahedron.json");
  Involution identity;
  identity.image.resize(z.num_top());
  std::iota(identity.image.begin(), identity.image.end(), 0);
  CHECK_FALSE(is_in_P_omega(z, identity, ColorSet::single(0)));
  auto lambda = canonical_involution(z, ColorSet::single(0));
  CHECK_FALSE(is_in_P_omega(z, lambda, ColorSet::of({1, 2})));
  std::swap(lambda.image[0], lambda.image[1]);
  CHECK_FALSE(is_in_P_omega(z, lambda, ColorSet::single(0)));
}

TEST_CASE("enumeration agrees with counting and is monotone in omega") {
  const auto z = prepared("octahedron.json");
  const auto subsets = proper_subsets(2);
  for (ColorSet w : subsets) {
    const auto all = enumerate_P_omega(z, w);
    CHECK(all.size() == count_P_omega(z, w));
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const Involution& a, const Involution& b) { return a.image < b.image; }));
    for (const auto& lambda : all) CHECK(is_in_P_omega(z, lambda, w));
    for (ColorSet bigger : subsets) {
      if (!w.proper_subset_of(bigger)) continue;
      for (const auto& lambda : enumerate_P_omega(z, bigger)) CHECK(is_in_P_omega(z, lambda, w));
    }
  }
}

TEST_CASE("conjugation stays inside a P-set") {
  const auto z = prepared("octahedron.json");
  const auto subsets = proper_subsets(2);
  for (ColorSet w : subsets)
    for (ColorSet g : subsets) {
      if (!g.subset_of(w)) continue;
      for (const auto& a : enumerate_P_omega(z, w))
        for (const auto& b : enumerate_P_omega(z, g)) CHECK(is_in_P_omega(z, conjugate(a, b), g));
    }
}

TEST_CASE("matching enumeration is capped") {
  const auto z = prepared("tetra_boundary.json");
  CHECK(z.num_top() == 24);
  CHECK_THROWS_AS(count_P_omega(z, ColorSet::single(0)), Overflow);
  CHECK_THROWS_AS(enumerate_P_omega(z, ColorSet::single(0)), Overflow);
  CHECK(count_P_omega(z, ColorSet::single(1), 24) == 64);
}
