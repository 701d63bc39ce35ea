#include "realizer/involutions.hpp"

#include <algorithm>
#include <functional>

#include "realizer/errors.hpp"

namespace realizer {

namespace {

void check_cap(const ColoredPseudomanifold& z, std::size_t cap) {
  if (z.num_top() > cap)
    throw Overflow("matching enumeration needs at most " + std::to_string(cap) + " top simplices, got " +
                   std::to_string(z.num_top()));
}

// Calls visit(image) for every perfect matching of the compatibility graph.
void for_each_matching(const ColoredPseudomanifold& z, ColorSet omega,
                       const std::function<void(const std::vector<int>&)>& visit) {
  const auto graph = compatibility_graph(z, omega);
  std::vector<int> plus;
  for (std::size_t s = 0; s < z.num_top(); ++s)
    if (z.parts()[s] > 0) plus.push_back(static_cast<int>(s));
  if (plus.size() * 2 != z.num_top()) return;
  std::vector<int> image(z.num_top(), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == plus.size()) {
      visit(image);
      return;
    }
    const int s = plus[i];
    for (int t : graph[s]) {
      if (image[t] >= 0) continue;
      image[s] = t;
      image[t] = s;
      rec(i + 1);
      image[s] = -1;
      image[t] = -1;
    }
  };
  rec(0);
}

}  // namespace

bool compatible(const ColoredPseudomanifold& z, int sigma, int tau, ColorSet omega) {
  return omega.subset_of(z.agreement(sigma, tau));
}

std::vector<std::vector<int>> compatibility_graph(const ColoredPseudomanifold& z, ColorSet omega) {
  std::vector<std::vector<int>> adj(z.num_top());
  for (std::size_t s = 0; s < z.num_top(); ++s) {
    if (z.parts()[s] < 0) continue;
    for (std::size_t t = 0; t < z.num_top(); ++t)
      if (z.parts()[t] < 0 && compatible(z, static_cast<int>(s), static_cast<int>(t), omega))
        adj[s].push_back(static_cast<int>(t));
  }
  return adj;
}

ColorSet canonical_extension(ColorSet omega, int n) {
  ColorSet ext = omega;
  for (int c = 0; c <= n && ext.size() < n; ++c) ext.bits |= 1u << c;
  return ext;
}

Involution canonical_involution(const ColoredPseudomanifold& z, ColorSet omega) {
  const int n = z.dim();
  const ColorSet ext = canonical_extension(omega, n);
  const int missing = ColorSet{ColorSet::full(n).bits & ~ext.bits}.lowest();
  Involution lambda{std::vector<int>(z.num_top(), -1)};
  for (std::size_t s = 0; s < z.num_top(); ++s) {
    // The facet colored `ext` omits the vertex of color `missing`.
    const auto& simplex = z.complex()[s];
    const int v = z.vertex_of_color(static_cast<int>(s), missing);
    const auto pos = std::find(simplex.begin(), simplex.end(), v) - simplex.begin();
    lambda.image[s] = z.dual().neighbor[s][pos].simplex;
  }
  return lambda;
}

bool is_in_P_omega(const ColoredPseudomanifold& z, const Involution& lambda, ColorSet omega) {
  const std::size_t m = z.num_top();
  if (lambda.image.size() != m) return false;
  for (std::size_t s = 0; s < m; ++s) {
    const int t = lambda.image[s];
    if (t < 0 || static_cast<std::size_t>(t) >= m) return false;
    if (t == static_cast<int>(s)) return false;
    if (lambda.image[t] != static_cast<int>(s)) return false;
    if (z.parts()[t] == z.parts()[s]) return false;
    if (!compatible(z, static_cast<int>(s), t, omega)) return false;
  }
  return true;
}

Involution conjugate(const Involution& a, const Involution& b) {
  Involution out{std::vector<int>(a.image.size())};
  for (std::size_t s = 0; s < a.image.size(); ++s) out.image[s] = a.image[b.image[a.image[s]]];
  return out;
}

std::uint64_t count_P_omega(const ColoredPseudomanifold& z, ColorSet omega, std::size_t cap) {
  check_cap(z, cap);
  std::uint64_t count = 0;
  for_each_matching(z, omega, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<Involution> enumerate_P_omega(const ColoredPseudomanifold& z, ColorSet omega, std::size_t cap) {
  check_cap(z, cap);
  std::vector<Involution> out;
  for_each_matching(z, omega, [&](const std::vector<int>& image) { out.push_back(Involution{image}); });
  return out;
}

}  // namespace realizer
