#include "realizer/tomei.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "realizer/errors.hpp"

namespace realizer {

PermutahedralComplex::PermutahedralComplex(std::shared_ptr<const Permutahedron> polytope, std::size_t num_cells)
    : polytope_(std::move(polytope)), num_cells_(num_cells), glue_(num_cells * polytope_->subsets().size(), -1) {}

void PermutahedralComplex::glue(int cell, int subset, int other) {
  int& a = glue_[cell * num_subsets() + subset];
  int& b = glue_[other * num_subsets() + subset];
  if ((a != -1 && a != other) || (b != -1 && b != cell) || cell == other) {
    std::ostringstream os;
    os << "facet " << to_string(polytope_->subsets()[subset]) << " of cell " << cell
       << " cannot be glued to cell " << other;
    throw InconsistentGluing(os.str());
  }
  a = other;
  b = cell;
}

bool PermutahedralComplex::closed() const {
  return std::find(glue_.begin(), glue_.end(), -1) == glue_.end();
}

FaceClasses face_classes(const PermutahedralComplex& pc) {
  const Permutahedron& poly = pc.polytope();
  const std::size_t nf = poly.faces().size();
  const bool closed = pc.closed();

  // Nested gluings must commute wherever both composites are defined.
  for (std::size_t f = 0; f < nf; ++f) {
    if (poly.codim(static_cast<int>(f)) != 2) continue;
    const int s1 = poly.facet_indices(static_cast<int>(f))[0];
    const int s2 = poly.facet_indices(static_cast<int>(f))[1];
    for (std::size_t a = 0; a < pc.num_cells(); ++a) {
      const int a1 = pc.neighbor(static_cast<int>(a), s1);
      const int a2 = pc.neighbor(static_cast<int>(a), s2);
      if (a1 < 0 || a2 < 0) continue;
      const int x = pc.neighbor(a1, s2);
      const int y = pc.neighbor(a2, s1);
      if (x >= 0 && y >= 0 && x != y) {
        std::ostringstream os;
        os << "gluings across " << to_string(poly.faces()[f]) << " do not commute at cell " << a;
        throw InconsistentGluing(os.str());
      }
    }
  }

  FaceClasses fc;
  fc.class_of.assign(pc.num_cells() * nf, -1);
  fc.count_by_codim.assign(pc.dim() + 1, 0);
  std::vector<int> orbit;
  for (std::size_t a = 0; a < pc.num_cells(); ++a) {
    for (std::size_t f = 0; f < nf; ++f) {
      if (fc.class_of[a * nf + f] >= 0) continue;
      const int id = static_cast<int>(fc.classes.size());
      const auto& facets = poly.facet_indices(static_cast<int>(f));
      orbit.assign(1, static_cast<int>(a));
      fc.class_of[a * nf + f] = id;
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (int s : facets) {
          const int b = pc.neighbor(orbit[head], s);
          if (b >= 0 && fc.class_of[b * nf + f] < 0) {
            fc.class_of[b * nf + f] = id;
            orbit.push_back(b);
          }
        }
      const int codim = static_cast<int>(facets.size());
      if (closed && orbit.size() != (std::size_t{1} << codim)) {
        std::ostringstream os;
        os << "face " << to_string(poly.faces()[f]) << " of cell " << a << " has " << orbit.size()
           << " cells around it, expected " << (1u << codim);
        throw InconsistentGluing(os.str());
      }
      fc.classes.push_back({static_cast<int>(a), static_cast<int>(f), codim, static_cast<int>(orbit.size())});
      ++fc.count_by_codim[codim];
    }
  }
  return fc;
}

CellTriangulation triangulate(const PermutahedralComplex& pc) { return triangulate(pc, face_classes(pc)); }

CellTriangulation triangulate(const PermutahedralComplex& pc, FaceClasses classes) {
  const auto& flags = pc.polytope().flags();
  CellTriangulation t;
  std::vector<Simplex> top;
  top.reserve(pc.num_cells() * flags.size());
  for (std::size_t a = 0; a < pc.num_cells(); ++a)
    for (std::size_t fl = 0; fl < flags.size(); ++fl) {
      Simplex s;
      s.reserve(flags[fl].size());
      for (int face : flags[fl]) s.push_back(classes.of(pc, static_cast<int>(a), face));
      top.push_back(std::move(s));
      t.source_cell.push_back(static_cast<int>(a));
      t.source_flag.push_back(static_cast<int>(fl));
    }
  const int nv = static_cast<int>(classes.classes.size());
  t.complex = AbstractComplex(pc.dim(), nv, std::move(top));
  t.classes = std::move(classes);
  return t;
}

long euler_characteristic(const FaceClasses& fc, int n) {
  long chi = 0;
  for (int k = 0; k <= n; ++k) chi += ((n - k) % 2 == 0 ? 1 : -1) * static_cast<long>(fc.count_by_codim[k]);
  return chi;
}

std::vector<std::vector<Simplex>> all_faces(const AbstractComplex& c) {
  const int n = c.dim();
  std::vector<std::vector<Simplex>> faces(n + 1);
  for (const auto& s : c.top())
    for (std::uint32_t mask = 1; mask < (1u << (n + 1)); ++mask) {
      Simplex f;
      for (int i = 0; i <= n; ++i)
        if (mask >> i & 1u) f.push_back(s[i]);
      faces[f.size() - 1].push_back(std::move(f));
    }
  for (auto& fs : faces) {
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  }
  return faces;
}

long euler_characteristic(const AbstractComplex& c) {
  long chi = 0;
  const auto faces = all_faces(c);
  for (std::size_t d = 0; d < faces.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(faces[d].size());
  return chi;
}

SurfaceReport verify_surface(const AbstractComplex& c) {
  SurfaceReport r;
  if (c.dim() != 2) {
    r.witness = "not two-dimensional";
    return r;
  }
  const auto v = validate_pseudomanifold(c);
  if (!v.closed()) {
    r.witness = v.summary();
    return r;
  }
  std::map<int, std::vector<std::pair<int, int>>> link;
  for (const auto& s : c.top()) {
    link[s[0]].emplace_back(s[1], s[2]);
    link[s[1]].emplace_back(s[0], s[2]);
    link[s[2]].emplace_back(s[0], s[1]);
  }
  for (const auto& [vertex, edges] : link) {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    bool cycle = true;
    for (const auto& [x, nb] : adj) cycle = cycle && nb.size() == 2;
    // Walk the cycle from the first link vertex; it must visit every link vertex.
    std::size_t visited = 0;
    if (cycle) {
      int prev = -1;
      int cur = adj.begin()->first;
      do {
        const auto& nb = adj[cur];
        const int next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
        ++visited;
      } while (cur != adj.begin()->first && visited <= adj.size());
    }
    if (!cycle || visited != adj.size()) {
      r.witness = "link of vertex " + std::to_string(vertex) + " is not a single cycle";
      return r;
    }
  }
  r.ok = true;
  return r;
}

bool orientable(const PermutahedralComplex& pc) {
  try {
    orient(triangulate(pc).complex);
    return true;
  } catch (const NonOrientable&) {
    return false;
  }
}

PermutahedralComplex build_tomei(int n) {
  auto poly = std::make_shared<const Permutahedron>(n);
  PermutahedralComplex pc(poly, std::size_t{1} << n);
  const auto& subsets = poly->subsets();
  for (std::uint32_t g = 0; g < (1u << n); ++g)
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      const GroupElem other = GroupElem{g} * GroupElem::generator(subsets[s].size());
      pc.glue(static_cast<int>(g), static_cast<int>(s), static_cast<int>(other.bits));
    }
  return pc;
}

}  // namespace realizer
