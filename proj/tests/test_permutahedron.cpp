#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "realizer/permutahedron.hpp"

using namespace realizer;

namespace {

// Faces of codimension k correspond to ordered partitions of n+1 elements into
// k+1 blocks; count them as surjections by brute force.
std::size_t surjection_count(int elements, int blocks) {
  std::size_t total = 0;
  std::vector<int> f(elements, 0);
  while (true) {
    std::vector<bool> hit(blocks, false);
    for (int x : f) hit[x] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++total;
    int i = 0;
    while (i < elements && ++f[i] == blocks) f[i++] = 0;
    if (i == elements) break;
  }
  return total;
}

// Maximal chains of the face lattice, enumerated by adding one subset at a time.
std::size_t flag_count_oracle(int n) {
  const auto all = proper_subsets(n);
  std::function<std::size_t(std::vector<ColorSet>&)> grow = [&](std::vector<ColorSet>& chosen) -> std::size_t {
    if (static_cast<int>(chosen.size()) == n) return 1;
    std::size_t total = 0;
    for (ColorSet s : all) {
      if (std::find(chosen.begin(), chosen.end(), s) != chosen.end()) continue;
      bool ok = true;
      for (ColorSet t : chosen) ok = ok && facets_intersect(s, t);
      if (!ok) continue;
      chosen.push_back(s);
      total += grow(chosen);
      chosen.pop_back();
    }
    return total;
  };
  std::vector<ColorSet> chosen;
  return grow(chosen);
}

}  // namespace

TEST_CASE("proper subsets come in size-then-lexicographic order") {
  const auto s = proper_subsets(2);
  REQUIRE(s.size() == 6);
  std::vector<std::string> printed;
  for (ColorSet x : s) printed.push_back(to_string(x));
  CHECK(printed == std::vector<std::string>{"{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}"});
  CHECK(proper_subsets(3).size() == 14);
  CHECK(proper_subsets(1).size() == 2);
}

TEST_CASE("facets meet exactly along nested subsets") {
  CHECK(facets_intersect(ColorSet::of({0}), ColorSet::of({0, 1})));
  CHECK(facets_intersect(ColorSet::of({0, 1}), ColorSet::of({0})));
  CHECK_FALSE(facets_intersect(ColorSet::of({0}), ColorSet::of({1})));
  CHECK_FALSE(facets_intersect(ColorSet::of({0, 1}), ColorSet::of({1, 2})));
  CHECK(is_chain({ColorSet::of({1}), ColorSet::of({1, 2})}, 2));
  CHECK_FALSE(is_chain({ColorSet::of({1, 2}), ColorSet::of({1})}, 2));
  CHECK_FALSE(is_chain({ColorSet::full(2)}, 2));
  CHECK(is_chain({}, 2));
}

TEST_CASE("face counts match ordered set partitions") {
  for (int n = 1; n <= 4; ++n) {
    const Permutahedron p(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(p.num_faces_of_codim(k) == surjection_count(n + 1, k + 1));
      CHECK(enumerate_faces(n, k).size() == surjection_count(n + 1, k + 1));
    }
  }
  const Permutahedron p3(3);
  CHECK(p3.num_faces_of_codim(1) == 14);
  CHECK(p3.num_faces_of_codim(2) == 36);
  CHECK(p3.num_faces_of_codim(3) == 24);
}

TEST_CASE("the one-skeleton is the adjacent-transposition graph") {
  for (int n = 2; n <= 3; ++n) {
    const Permutahedron p(n);
    std::size_t perms = 1;
    for (int i = 2; i <= n + 1; ++i) perms *= i;
    CHECK(p.num_faces_of_codim(n) == perms);
    CHECK(p.num_faces_of_codim(n - 1) == perms * n / 2);
    // Every edge has two endpoints and every vertex has n edges.
    for (const auto& edge : enumerate_faces(n, n - 1)) {
      std::size_t ends = 0;
      for (const auto& c : contained_faces(edge, n)) ends += c.size() == static_cast<std::size_t>(n);
      CHECK(ends == 2);
    }
    for (const auto& v : enumerate_faces(n, n)) {
      std::size_t edges = 0;
      for (const auto& c : containing_faces(v)) edges += c.size() == static_cast<std::size_t>(n - 1);
      CHECK(edges == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("refinement of a facet chain") {
  const Chain facet{ColorSet::of({0})};
  const auto below = contained_faces(facet, 2);
  // The facet itself (a hexagon edge) and its two vertices.
  CHECK(below.size() == 3);
  CHECK(std::count_if(below.begin(), below.end(), [](const Chain& c) { return c.size() == 2; }) == 2);
  CHECK(containing_faces({ColorSet::of({0}), ColorSet::of({0, 1})}).size() == 4);
  CHECK(to_string(Chain{ColorSet::of({0}), ColorSet::of({0, 2})}) == "({1}<{1,3})");
}

TEST_CASE("face ids and facet indices") {
  const Permutahedron p(3);
  CHECK(p.faces()[0].empty());
  CHECK(p.codim(0) == 0);
  for (std::size_t f = 0; f < p.faces().size(); ++f) {
    CHECK(p.face_id(p.faces()[f]) == static_cast<int>(f));
    CHECK(p.facet_indices(static_cast<int>(f)).size() == p.faces()[f].size());
    for (int s : p.facet_indices(static_cast<int>(f)))
      CHECK(std::find(p.faces()[f].begin(), p.faces()[f].end(), p.subsets()[s]) != p.faces()[f].end());
  }
  for (std::size_t i = 0; i < p.subsets().size(); ++i) CHECK(p.subset_index(p.subsets()[i]) == static_cast<int>(i));
  for (std::size_t f = 1; f < p.faces().size(); ++f) {
    CHECK(p.codim(static_cast<int>(f)) >= p.codim(static_cast<int>(f) - 1));
    if (p.codim(static_cast<int>(f)) == p.codim(static_cast<int>(f) - 1))
      CHECK(chain_less(p.faces()[f - 1], p.faces()[f]));
  }
}

TEST_CASE("alternating face count is one") {
  for (int n = 1; n <= 5; ++n) {
    const Permutahedron p(n);
    long chi = 0;
    for (int k = 0; k <= n; ++k) chi += ((n - k) % 2 == 0 ? 1 : -1) * static_cast<long>(p.num_faces_of_codim(k));
    CHECK(chi == 1);
  }
}

TEST_CASE("complete flags") {
  CHECK(Permutahedron(2).flags().size() == 12);
  CHECK(Permutahedron(3).flags().size() == 144);
  for (int n = 1; n <= 4; ++n) {
    const Permutahedron p(n);
    CHECK(p.flags().size() == flag_count_oracle(n));
    std::set<std::vector<int>> distinct(p.flags().begin(), p.flags().end());
    CHECK(distinct.size() == p.flags().size());
    for (const auto& flag : p.flags()) {
      REQUIRE(flag.size() == static_cast<std::size_t>(n + 1));
      for (int k = 0; k <= n; ++k) CHECK(p.codim(flag[k]) == k);
      for (int k = 1; k <= n; ++k) {
        const Chain& a = p.faces()[flag[k - 1]];
        const Chain& b = p.faces()[flag[k]];
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end(),
                            [](ColorSet x, ColorSet y) { return subset_order_less(x, y); }));
      }
    }
  }
}

TEST_CASE("the barycentric triangulation is a ball") {
  const Permutahedron p(2);
  const auto t = barycentric_triangulation(p);
  CHECK(t.size() == 12);
  CHECK(t.num_vertices() == 13);
  const auto r = validate_pseudomanifold(t);
  CHECK(r.boundary_faces.size() == 12);
  CHECK(r.branching_faces.empty());
}
