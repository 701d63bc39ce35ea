#include <doctest.h>

#include <cmath>

#include "realizer/errors.hpp"
#include "realizer/homology.hpp"
#include "support.hpp"

using namespace realizer;
using realizer::testing::load;

namespace {

// Rank over the rationals by floating-point elimination with partial pivoting.
std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<double>> a(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).convert_to<double>();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t best = rank;
    for (std::size_t i = rank; i < m.rows(); ++i)
      if (std::abs(a[i][col]) > std::abs(a[best][col])) best = i;
    if (std::abs(a[best][col]) < 1e-9) continue;
    std::swap(a[best], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const double factor = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("Smith form of small matrices") {
  const auto m = IntMatrix::from_rows({{2, 0}, {0, 3}});
  const auto s = smith_normal_form(m);
  CHECK(s.d == IntMatrix::from_rows({{1, 0}, {0, 6}}));
  CHECK(s.invariant_factors == big({1, 6}));
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);

  const auto zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.invariant_factors.empty());
  CHECK(is_smith_form(zero.d));
  CHECK(smith_normal_form(IntMatrix::identity(4)).invariant_factors == big({1, 1, 1, 1}));

  const auto r = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto sr = smith_normal_form(r);
  CHECK(sr.invariant_factors == big({2, 6, 12}));
  CHECK(sr.u * r * sr.v == sr.d);
  CHECK(smith_normal_form(r, false).invariant_factors == sr.invariant_factors);
}

TEST_CASE("is_smith_form") {
  CHECK(is_smith_form(IntMatrix::from_rows({{1, 0, 0}, {0, 2, 0}})));
  CHECK_FALSE(is_smith_form(IntMatrix::from_rows({{2, 0}, {0, 3}})));
  CHECK_FALSE(is_smith_form(IntMatrix::from_rows({{0, 0}, {0, 1}})));
  CHECK_FALSE(is_smith_form(IntMatrix::from_rows({{-1, 0}, {0, 1}})));
  CHECK_FALSE(is_smith_form(IntMatrix::from_rows({{1, 1}, {0, 1}})));
}

TEST_CASE("Bareiss determinant") {
  CHECK(determinant(IntMatrix::from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(determinant(IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == 4);
}

TEST_CASE("boundary of a single triangle") {
  const AbstractComplex t(2, 3, {{0, 1, 2}});
  const auto cc = boundary_matrices(t);
  REQUIRE(cc.boundary.size() == 3);
  // Edges sorted: [0,1], [0,2], [1,2]; d[0,1,2] = [1,2] - [0,2] + [0,1].
  CHECK(to_dense(cc.boundary[2]) == IntMatrix::from_rows({{1}, {-1}, {1}}));
  CHECK(is_zero(multiply(cc.boundary[1], cc.boundary[2])));
  CHECK(homology(t).to_string() == "(Z, 0, 0)");
}

TEST_CASE("hexagon boundary has rank five") {
  const auto cc = boundary_matrices(load("hexagon.json").complex);
  const auto d1 = to_dense(cc.boundary[1]);
  CHECK(rational_rank(d1) == 5);
  CHECK(invariant_factors(cc.boundary[1]).size() == 5);
  CHECK(homology(cc).to_string() == "(Z, Z)");
}

TEST_CASE("spheres and the projective plane") {
  CHECK(homology(load("octahedron.json").complex).to_string() == "(Z, 0, Z)");
  CHECK(homology(load("tetra_boundary.json").complex).euler() == 2);
  CHECK(homology(load("cross_polytope4.json").complex).to_string() == "(Z, 0, 0, Z)");
  const auto h = homology(load("rp2.json").complex);
  CHECK(h.betti == std::vector<long>{1, 0, 0});
  CHECK(h.torsion[1] == big({2}));
  CHECK(h.torsion[0].empty());
  CHECK(h.euler() == 1);
}

TEST_CASE("sparse and dense invariant factors agree") {
  for (const char* name : {"octahedron.json", "rp2.json", "tetra_boundary.json", "cross_polytope4.json"}) {
    const auto cc = boundary_matrices(load(name).complex);
    for (const auto& d : cc.boundary) CHECK(invariant_factors(d) == smith_normal_form(to_dense(d), false).invariant_factors);
  }
}

TEST_CASE("fundamental classes are cycles") {
  for (const char* name : {"octahedron.json", "tetra_boundary.json", "cross_polytope4.json"}) {
    const auto c = load(name).complex;
    const auto cc = boundary_matrices(c);
    const auto fc = fundamental_class(c);
    for (long x : apply(cc.boundary.back(), fc)) CHECK(x == 0);
  }
  CHECK_THROWS_AS(fundamental_class(load("rp2.json").complex), NonOrientable);
  const auto c = load("octahedron.json").complex;
  CHECK_THROWS_AS(fundamental_class(c, Orientation(c.size(), 1)), NonOrientable);
}

TEST_CASE("push-forward of the identity and of a fold") {
  const auto c = load("octahedron.json").complex;
  const auto fc = fundamental_class(c);
  std::vector<int> id(c.num_vertices());
  for (int v = 0; v < c.num_vertices(); ++v) id[v] = v;
  CHECK(push_forward(c, fc, id, c) == fc);
  // Folding the octahedron onto one triangle: every simplex lands on [0,2,4]
  // with alternating signs, so the images cancel.
  const std::vector<int> fold{0, 0, 2, 2, 4, 4};
  const AbstractComplex tri(2, 6, {{0, 2, 4}});
  CHECK(push_forward(c, fc, fold, tri) == std::vector<long>{0});
  // Collapsing a vertex makes everything degenerate.
  CHECK(push_forward(c, fc, std::vector<int>(6, 0), tri) == std::vector<long>{0});
}
