#include "realizer/pseudomanifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "realizer/errors.hpp"

namespace realizer {

namespace {

std::string simplex_str(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

struct Coface {
  int simplex;
  int position;
};

std::unordered_map<Simplex, std::vector<Coface>, VectorHash> facet_cofaces(const AbstractComplex& c) {
  std::unordered_map<Simplex, std::vector<Coface>, VectorHash> out;
  out.reserve(c.size() * (c.dim() + 1));
  for (std::size_t s = 0; s < c.size(); ++s)
    for (std::size_t i = 0; i < c[s].size(); ++i)
      out[drop_vertex(c[s], i)].push_back({static_cast<int>(s), static_cast<int>(i)});
  return out;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Lexicographically smallest top simplex of each component.
std::vector<int> component_roots(const AbstractComplex& c, const std::vector<int>& comp) {
  const int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> root(k, -1);
  for (std::size_t s = 0; s < c.size(); ++s) {
    int& r = root[comp[s]];
    if (r < 0 || c[s] < c[r]) r = static_cast<int>(s);
  }
  return root;
}

}  // namespace

AbstractComplex::AbstractComplex(int n, int num_vertices, std::vector<Simplex> top)
    : n_(n), num_vertices_(num_vertices), top_(std::move(top)) {
  if (n < 0) throw InvalidComplex("negative dimension");
  if (num_vertices < 0) throw InvalidComplex("negative vertex count");
  for (auto& s : top_) {
    std::sort(s.begin(), s.end());
    if (s.size() != static_cast<std::size_t>(n + 1))
      throw InvalidComplex("simplex " + simplex_str(s) + " does not have n+1 vertices");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InvalidComplex("simplex " + simplex_str(s) + " repeats a vertex");
    if (s.front() < 0 || s.back() >= num_vertices)
      throw InvalidComplex("simplex " + simplex_str(s) + " references a missing vertex");
  }
  std::unordered_map<Simplex, int, VectorHash> seen;
  for (const auto& s : top_)
    if (!seen.emplace(s, 0).second) throw InvalidComplex("duplicate simplex " + simplex_str(s));
}

Simplex drop_vertex(const Simplex& s, std::size_t pos) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != pos) f.push_back(s[i]);
  return f;
}

DualGraph dual_graph(const AbstractComplex& c) {
  DualGraph g;
  g.neighbor.assign(c.size(), std::vector<FacetNeighbor>(c.dim() + 1));
  for (const auto& [facet, cof] : facet_cofaces(c)) {
    if (cof.size() != 2) continue;
    g.neighbor[cof[0].simplex][cof[0].position] = {cof[1].simplex, cof[1].position};
    g.neighbor[cof[1].simplex][cof[1].position] = {cof[0].simplex, cof[0].position};
  }
  return g;
}

std::vector<int> dual_components(const AbstractComplex& c, const DualGraph& g) {
  std::vector<int> comp(c.size(), -1);
  int next = 0;
  for (std::size_t s0 = 0; s0 < c.size(); ++s0) {
    if (comp[s0] >= 0) continue;
    std::queue<int> q;
    q.push(static_cast<int>(s0));
    comp[s0] = next;
    while (!q.empty()) {
      const int s = q.front();
      q.pop();
      for (const auto& nb : g.neighbor[s])
        if (nb.simplex >= 0 && comp[nb.simplex] < 0) {
          comp[nb.simplex] = next;
          q.push(nb.simplex);
        }
    }
    ++next;
  }
  return comp;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (valid()) {
    os << "closed strongly connected pseudomanifold";
    return os.str();
  }
  if (!boundary_faces.empty())
    os << boundary_faces.size() << " boundary face(s), first " << simplex_str(boundary_faces.front()) << "; ";
  if (!branching_faces.empty())
    os << branching_faces.size() << " branching face(s), first " << simplex_str(branching_faces.front()) << "; ";
  if (components != 1) os << components << " strongly connected component(s)";
  std::string out = os.str();
  if (out.size() >= 2 && out.compare(out.size() - 2, 2, "; ") == 0) out.resize(out.size() - 2);
  return out;
}

ValidationReport validate_pseudomanifold(const AbstractComplex& c) {
  ValidationReport r;
  std::vector<int> parent(c.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [facet, cof] : facet_cofaces(c)) {
    if (cof.size() == 1) r.boundary_faces.push_back(facet);
    if (cof.size() > 2) r.branching_faces.push_back(facet);
    for (std::size_t i = 1; i < cof.size(); ++i)
      parent[find_root(parent, cof[i].simplex)] = find_root(parent, cof[0].simplex);
  }
  std::sort(r.boundary_faces.begin(), r.boundary_faces.end());
  std::sort(r.branching_faces.begin(), r.branching_faces.end());
  for (std::size_t s = 0; s < c.size(); ++s)
    if (find_root(parent, static_cast<int>(s)) == static_cast<int>(s)) ++r.components;
  return r;
}

Subdivision barycentric_subdivide(const AbstractComplex& c) {
  const int n = c.dim();
  Subdivision sd;
  std::set<std::pair<std::size_t, Simplex>> all;
  for (const auto& s : c.top()) {
    for (std::uint32_t mask = 1; mask < (1u << (n + 1)); ++mask) {
      Simplex f;
      for (int i = 0; i <= n; ++i)
        if (mask >> i & 1u) f.push_back(s[i]);
      all.emplace(f.size(), std::move(f));
    }
  }
  std::unordered_map<Simplex, int, VectorHash> id;
  for (const auto& [size, f] : all) {
    id.emplace(f, static_cast<int>(sd.faces.size()));
    sd.faces.push_back(f);
    sd.coloring.push_back(static_cast<int>(size) - 1);
  }
  std::vector<Simplex> top;
  for (std::size_t s = 0; s < c.size(); ++s) {
    std::vector<int> order = c[s];
    do {
      Simplex flag;
      Simplex prefix;
      for (int v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        flag.push_back(id.at(prefix));
      }
      top.push_back(std::move(flag));
      sd.parent.push_back(static_cast<int>(s));
      sd.flag_order.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  sd.complex = AbstractComplex(n, static_cast<int>(sd.faces.size()), std::move(top));
  return sd;
}

bool check_regular_coloring(const AbstractComplex& c, const Coloring& col) {
  const int n = c.dim();
  if (col.size() != static_cast<std::size_t>(c.num_vertices())) return false;
  for (int x : col)
    if (x < 0 || x > n) return false;
  for (const auto& s : c.top())
    if (mu(s, col) != ColorSet::full(n)) return false;
  return true;
}

Bipartition bipartition(const AbstractComplex& c) {
  const DualGraph g = dual_graph(c);
  const auto comp = dual_components(c, g);
  Bipartition part(c.size(), 0);
  for (int root : component_roots(c, comp)) {
    std::queue<int> q;
    part[root] = 1;
    q.push(root);
    while (!q.empty()) {
      const int s = q.front();
      q.pop();
      for (const auto& nb : g.neighbor[s]) {
        if (nb.simplex < 0) continue;
        if (part[nb.simplex] == 0) {
          part[nb.simplex] = -part[s];
          q.push(nb.simplex);
        } else if (part[nb.simplex] == part[s]) {
          throw OddCycle("facet-dual graph has an odd cycle through " + simplex_str(c[s]) + " and " +
                         simplex_str(c[nb.simplex]));
        }
      }
    }
  }
  return part;
}

Orientation orient(const AbstractComplex& c) { return orient(c, dual_graph(c)); }

Orientation orient(const AbstractComplex& c, const DualGraph& g) {
  const auto comp = dual_components(c, g);
  Orientation sign(c.size(), 0);
  for (int root : component_roots(c, comp)) {
    std::queue<int> q;
    sign[root] = 1;
    q.push(root);
    while (!q.empty()) {
      const int s = q.front();
      q.pop();
      for (std::size_t i = 0; i < g.neighbor[s].size(); ++i) {
        const auto& nb = g.neighbor[s][i];
        if (nb.simplex < 0) continue;
        // Induced facet orientations (-1)^i sign[s] and (-1)^j sign[t] must cancel.
        const int want = -sign[s] * (((i + nb.position) % 2 == 0) ? 1 : -1);
        if (sign[nb.simplex] == 0) {
          sign[nb.simplex] = want;
          q.push(nb.simplex);
        } else if (sign[nb.simplex] != want) {
          throw NonOrientable("orientation conflict across facet " + simplex_str(drop_vertex(c[s], i)) +
                              " between " + simplex_str(c[s]) + " and " + simplex_str(c[nb.simplex]));
        }
      }
    }
  }
  return sign;
}

bool is_coherent(const AbstractComplex& c, const Orientation& o) {
  if (o.size() != c.size()) return false;
  for (int x : o)
    if (x != 1 && x != -1) return false;
  const DualGraph g = dual_graph(c);
  for (std::size_t s = 0; s < c.size(); ++s)
    for (std::size_t i = 0; i < g.neighbor[s].size(); ++i) {
      const auto& nb = g.neighbor[s][i];
      if (nb.simplex < 0) continue;
      const int a = o[s] * ((i % 2 == 0) ? 1 : -1);
      const int b = o[nb.simplex] * ((nb.position % 2 == 0) ? 1 : -1);
      if (a + b != 0) return false;
    }
  return true;
}

Orientation subdivision_orientation(const Subdivision& sd, const Orientation& parent_orientation) {
  // The flag simplex [b_0, ..., b_n], b_k the barycenter of the first k+1 flag
  // vertices, has the orientation of the parent simplex in flag vertex order.
  // Subdivision vertex ids increase with face dimension, so flag order is sorted order.
  Orientation o(sd.complex.size());
  for (std::size_t i = 0; i < o.size(); ++i)
    o[i] = parent_orientation[sd.parent[i]] * sort_sign(sd.flag_order[i]);
  return o;
}

ColorSet mu(const Simplex& s, const Coloring& col) {
  ColorSet m;
  for (int v : s) m.bits |= 1u << col[v];
  return m;
}

ColoredPseudomanifold ColoredPseudomanifold::prepare(const AbstractComplex& input, std::optional<Coloring> coloring,
                                                     std::optional<Orientation> orientation) {
  const auto report = validate_pseudomanifold(input);
  if (!report.valid()) throw InvalidComplex("not a closed strongly connected pseudomanifold: " + report.summary());
  if (orientation && !is_coherent(input, *orientation))
    throw InvalidComplex("supplied orientation is not coherent");
  // Orient before coloring: a regularly colored pseudomanifold is bipartite
  // exactly when it is orientable, so this reports the root cause.
  if (!orientation) orientation = orient(input);

  ColoredPseudomanifold z;
  if (coloring && check_regular_coloring(input, *coloring)) {
    z.complex_ = input;
    z.coloring_ = std::move(*coloring);
    z.orientation_ = std::move(*orientation);
  } else {
    Subdivision sd = barycentric_subdivide(input);
    z.orientation_ = realizer::subdivision_orientation(sd, *orientation);
    z.complex_ = std::move(sd.complex);
    z.coloring_ = std::move(sd.coloring);
    z.subdivided_ = true;
  }
  z.dual_ = dual_graph(z.complex_);
  z.parts_ = bipartition(z.complex_);

  const int n = z.dim();
  z.by_color_.assign(z.num_top(), std::vector<int>(n + 1, -1));
  for (std::size_t s = 0; s < z.num_top(); ++s)
    for (int v : z.complex_[s]) z.by_color_[s][z.coloring_[v]] = v;

  z.sd_ = barycentric_subdivide(z.complex_);
  z.sd_orientation_ = realizer::subdivision_orientation(z.sd_, z.orientation_);
  for (std::size_t i = 0; i < z.sd_.faces.size(); ++i) z.face_id_.emplace(z.sd_.faces[i], static_cast<int>(i));
  return z;
}

ColorSet ColoredPseudomanifold::mu(int sigma) const { return realizer::mu(complex_[sigma], coloring_); }

Simplex ColoredPseudomanifold::face_of_colors(int sigma, ColorSet omega) const {
  Simplex f;
  for (int c : omega.elements()) f.push_back(by_color_[sigma][c]);
  std::sort(f.begin(), f.end());
  return f;
}

int ColoredPseudomanifold::b_of(int sigma, ColorSet omega) const {
  return face_id_.at(face_of_colors(sigma, omega));
}

ColorSet ColoredPseudomanifold::agreement(int sigma, int tau) const {
  ColorSet a;
  for (int c = 0; c <= dim(); ++c)
    if (by_color_[sigma][c] == by_color_[tau][c]) a.bits |= 1u << c;
  return a;
}

}  // namespace realizer
