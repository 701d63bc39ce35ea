#include <doctest.h>

#include <map>

#include "realizer/errors.hpp"
#include "realizer/homology.hpp"
#include "realizer/tomei.hpp"

using namespace realizer;

TEST_CASE("one-dimensional Tomei manifold is a circle of four edges") {
  const auto m = build_tomei(1);
  CHECK(m.num_cells() == 2);
  CHECK(m.closed());
  const auto fc = face_classes(m);
  CHECK(fc.count_by_codim == std::vector<std::size_t>{2, 2});
  CHECK(euler_characteristic(fc, 1) == 0);
  const auto k = triangulate(m);
  CHECK(k.complex.size() == 4);
  CHECK(validate_pseudomanifold(k.complex).valid());
  CHECK(euler_characteristic(k.complex) == 0);
}

TEST_CASE("two-dimensional Tomei manifold is a genus two surface") {
  const auto m = build_tomei(2);
  CHECK(m.num_cells() == 4);
  const auto fc = face_classes(m);
  CHECK(fc.count_by_codim == std::vector<std::size_t>{4, 12, 6});
  CHECK(euler_characteristic(fc, 2) == -2);
  const auto k = triangulate(m);
  CHECK(k.complex.size() == 48);
  CHECK(euler_characteristic(k.complex) == -2);
  CHECK(verify_surface(k.complex).ok);
  CHECK(orientable(m));
  CHECK_NOTHROW(orient(k.complex));
  CHECK(homology(k.complex).to_string() == "(Z, Z^4, Z)");
}

TEST_CASE("three-dimensional Tomei manifold") {
  const auto m = build_tomei(3);
  const auto fc = face_classes(m);
  CHECK(fc.count_by_codim == std::vector<std::size_t>{8, 56, 72, 24});
  CHECK(euler_characteristic(fc, 3) == 0);
  const auto k = triangulate(m);
  CHECK(k.complex.size() == 1152);
  CHECK(euler_characteristic(k.complex) == 0);
  CHECK(validate_pseudomanifold(k.complex).valid());
  CHECK(orientable(m));
}

TEST_CASE("gluing is an involution given by the subset size") {
  for (int n = 1; n <= 4; ++n) {
    const auto m = build_tomei(n);
    for (std::size_t g = 0; g < m.num_cells(); ++g)
      for (std::size_t s = 0; s < m.num_subsets(); ++s) {
        const int h = m.neighbor(static_cast<int>(g), static_cast<int>(s));
        CHECK(h == static_cast<int>(g ^ (1u << (m.polytope().subsets()[s].size() - 1))));
        CHECK(m.neighbor(h, static_cast<int>(s)) == static_cast<int>(g));
      }
  }
}

TEST_CASE("vertex orbits have size four for n = 2") {
  const auto m = build_tomei(2);
  const auto fc = face_classes(m);
  for (const auto& c : fc.classes) CHECK(c.orbit_size == 1 << c.codim);
  std::map<int, int> members;
  const int faces = static_cast<int>(m.polytope().faces().size());
  for (int cell = 0; cell < 4; ++cell)
    for (int f = 0; f < faces; ++f) ++members[fc.of(m, cell, f)];
  for (const auto& [id, count] : members) CHECK(count == fc.classes[id].orbit_size);
}

TEST_CASE("an unglued cell is its own set of classes") {
  const PermutahedralComplex single(std::make_shared<Permutahedron>(2), 1);
  CHECK_FALSE(single.closed());
  const auto fc = face_classes(single);
  CHECK(fc.classes.size() == single.polytope().faces().size());
  for (const auto& c : fc.classes) CHECK(c.orbit_size == 1);
  CHECK(euler_characteristic(fc, 2) == 1);
}

TEST_CASE("conflicting gluings are rejected") {
  PermutahedralComplex pc(std::make_shared<Permutahedron>(2), 3);
  pc.glue(0, 0, 1);
  CHECK(pc.neighbor(1, 0) == 0);
  CHECK_THROWS_AS(pc.glue(0, 0, 2), InconsistentGluing);
  CHECK_NOTHROW(pc.glue(1, 0, 0));
}

TEST_CASE("the two Euler characteristic routes agree") {
  for (int n = 1; n <= 3; ++n) {
    const auto m = build_tomei(n);
    const auto k = triangulate(m);
    CHECK(euler_characteristic(k.classes, n) == euler_characteristic(k.complex));
  }
}

TEST_CASE("surface check finds a pinched vertex") {
  // Two octahedra sharing a vertex: every edge has two triangles but vertex 0's link is two cycles.
  std::vector<Simplex> top;
  for (int a : {1, 2})
    for (int b : {3, 4})
      for (int c : {5, 6}) top.push_back({a, b, c});
  for (int a : {0, 7})
    for (int b : {8, 9})
      for (int c : {10, 11}) top.push_back({a, b, c});
  // Identify vertex 0 with vertex 1 by relabelling.
  for (auto& s : top)
    for (int& v : s)
      if (v == 1) v = 0;
  const AbstractComplex pinched(2, 12, top);
  const auto r = verify_surface(pinched);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.witness.empty());
}
