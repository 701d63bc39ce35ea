#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "realizer/covering.hpp"
#include "realizer/homology.hpp"
#include "realizer/realization.hpp"
#include "support.hpp"

using namespace realizer;
using realizer::testing::prepared;

namespace {

constexpr int kCases = 1000;
constexpr std::uint32_t kSeed = 20240611;

}  // namespace

TEST_CASE("phi is involutive and commutes along nested subsets") {
  const auto z = prepared("tetra_boundary.json");
  CoverSpace space(z);
  const auto cover = build_component(space, space.canonical_seed());
  const auto& subs = space.subsets();
  std::size_t checked = 0;
  for (const auto& v : cover.cells)
    for (std::size_t w = 0; w < subs.size(); ++w) {
      const int wi = static_cast<int>(w);
      REQUIRE(space.phi(wi, space.phi(wi, v)) == v);
      ++checked;
      for (std::size_t g = 0; g < subs.size(); ++g) {
        if (!subs[g].proper_subset_of(subs[w])) continue;
        const int gi = static_cast<int>(g);
        REQUIRE(space.phi(gi, space.phi(wi, v)) == space.phi(wi, space.phi(gi, v)));
      }
    }
  CHECK(checked >= kCases);
}

TEST_CASE("conjugation preserves the smaller P-set") {
  const auto z = prepared("tetra_boundary.json");
  const auto subs = proper_subsets(2);
  std::vector<std::vector<Involution>> p;
  for (ColorSet w : subs) p.push_back(enumerate_P_omega(z, w, 24));
  std::mt19937 rng(kSeed);
  int checked = 0;
  while (checked < kCases) {
    const std::size_t w = rng() % subs.size();
    const std::size_t g = rng() % subs.size();
    if (!subs[g].subset_of(subs[w])) continue;
    const auto& a = p[w][rng() % p[w].size()];
    const auto& b = p[g][rng() % p[g].size()];
    REQUIRE(is_in_P_omega(z, conjugate(a, b), subs[g]));
    ++checked;
  }
  CHECK(checked == kCases);
}

TEST_CASE("f agrees across every gluing") {
  const auto z = prepared("tetra_boundary.json");
  CoverSpace space(z);
  const auto cover = build_component(space, space.canonical_seed());
  const auto& poly = space.polytope();
  std::mt19937 rng(kSeed + 1);
  int checked = 0;
  while (checked < kCases) {
    const auto& v = cover.cells[rng() % cover.cells.size()];
    const int face = static_cast<int>(rng() % poly.faces().size());
    const auto& facets = poly.facet_indices(face);
    if (facets.empty()) continue;
    const int w = facets[rng() % facets.size()];
    const CoverCell u = space.phi(w, v);
    REQUIRE(f_vertex(z, v.sigma, poly.faces()[face]) == f_vertex(z, u.sigma, poly.faces()[face]));
    ++checked;
  }
  // Exhaustive version over every vertex class.
  CHECK_NOTHROW(build_f(z, cover, triangulate(cover.pc)));
}

TEST_CASE("Smith forms of random matrices") {
  std::mt19937 rng(kSeed + 2);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    const auto s = smith_normal_form(m);
    REQUIRE(is_smith_form(s.d));
    REQUIRE(s.u * m * s.v == s.d);
    REQUIRE(abs(determinant(s.u)) == 1);
    REQUIRE(abs(determinant(s.v)) == 1);
    if (r == c) {
      BigInt product = 1;
      for (std::size_t i = 0; i < r; ++i) product *= s.d(i, i);
      REQUIRE(abs(determinant(m)) == product);
    }
  }
}

TEST_CASE("boundary of a boundary vanishes on random complexes") {
  std::mt19937 rng(kSeed + 3);
  for (int t = 0; t < kCases; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int nv = n + 2 + static_cast<int>(rng() % 4);
    std::set<Simplex> top;
    const int want = 1 + static_cast<int>(rng() % 8);
    std::vector<int> verts(nv);
    for (int v = 0; v < nv; ++v) verts[v] = v;
    for (int k = 0; k < want; ++k) {
      std::shuffle(verts.begin(), verts.end(), rng);
      Simplex s(verts.begin(), verts.begin() + n + 1);
      std::sort(s.begin(), s.end());
      top.insert(s);
    }
    const AbstractComplex c(n, nv, {top.begin(), top.end()});
    const auto cc = boundary_matrices(c);
    for (std::size_t k = 2; k < cc.boundary.size(); ++k) REQUIRE(is_zero(multiply(cc.boundary[k - 1], cc.boundary[k])));
    const auto h = homology(cc);
    REQUIRE(h.euler() == euler_characteristic(c));
  }
}

TEST_CASE("components from random seeds cover and realize") {
  const auto z = prepared("octahedron.json");
  CoverSpace space(z);
  const auto full = build_full(space);
  const auto m = build_tomei(2);
  std::mt19937 rng(kSeed + 4);
  for (int t = 0; t < kCases; ++t) {
    const CoverCell seed = full.cells[rng() % full.cells.size()];
    REQUIRE(space.in_V(seed));
    const auto cover = build_component(space, seed);
    REQUIRE(std::find(cover.cells.begin(), cover.cells.end(), seed) != cover.cells.end());
    const auto report = verify_covering(cover, m);
    REQUIRE(report.degree * 4 == cover.cells.size());
    const auto k = triangulate(cover.pc);
    const auto deg = degree(z, cover, k, build_f(z, cover, k));
    REQUIRE(deg.degree > 0);
  }
}
