#include "realizer/realization.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "realizer/errors.hpp"

namespace realizer {

int f_vertex(const ColoredPseudomanifold& z, int sigma, const Chain& c) {
  return z.b_of(sigma, c.empty() ? ColorSet::full(z.dim()) : c.front());
}

SimplicialMap build_f(const ColoredPseudomanifold& z, const CoverComplex& cover, const CellTriangulation& k) {
  const auto& pc = cover.pc;
  const auto& faces = pc.polytope().faces();
  SimplicialMap f{std::vector<int>(k.complex.num_vertices(), -1)};
  for (std::size_t a = 0; a < pc.num_cells(); ++a)
    for (std::size_t face = 0; face < faces.size(); ++face) {
      const int cls = k.classes.of(pc, static_cast<int>(a), static_cast<int>(face));
      const int img = f_vertex(z, cover.cells[a].sigma, faces[face]);
      if (f.vertex_image[cls] < 0) f.vertex_image[cls] = img;
      if (f.vertex_image[cls] != img) {
        std::ostringstream os;
        os << "vertex class " << cls << " (face " << to_string(faces[face]) << ") has images " << f.vertex_image[cls]
           << " and " << img;
        throw NotWellDefined(os.str());
      }
    }

  const auto& zfaces = z.subdivision().faces;
  for (std::size_t t = 0; t < k.complex.size(); ++t) {
    std::vector<Simplex> images;
    for (int v : k.complex[t]) images.push_back(zfaces[f.vertex_image[v]]);
    std::sort(images.begin(), images.end(),
              [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    for (std::size_t i = 1; i < images.size(); ++i)
      if (!std::includes(images[i].begin(), images[i].end(), images[i - 1].begin(), images[i - 1].end()))
        throw NotWellDefined("top simplex " + std::to_string(t) + " of K does not land on a simplex of Z'");
  }
  return f;
}

DegreeReport degree(const ColoredPseudomanifold& z, const CoverComplex& cover, const CellTriangulation& k,
                    const SimplicialMap& f) {
  const auto& target = z.subdivision().complex;
  const auto& target_orientation = z.subdivision_orientation();
  std::unordered_map<Simplex, int, VectorHash> target_index;
  for (std::size_t t = 0; t < target.size(); ++t) target_index.emplace(target[t], static_cast<int>(t));

  const DualGraph kdual = dual_graph(k.complex);
  DegreeReport r;
  r.k_orientation = orient(k.complex, kdual);
  const auto comp = dual_components(k.complex, kdual);
  const int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

  // Local sign of every top simplex of K: 0 when degenerate.
  std::vector<int> image_of(k.complex.size(), -1);
  std::vector<int> local(k.complex.size(), 0);
  std::vector<int> flip(ncomp, 0);
  for (std::size_t s = 0; s < k.complex.size(); ++s) {
    std::vector<int> y;
    for (int v : k.complex[s]) y.push_back(f.vertex_image[v]);
    Simplex sorted = y;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      ++r.degenerate;
      continue;
    }
    ++r.nondegenerate;
    const auto it = target_index.find(sorted);
    if (it == target_index.end())
      throw NotWellDefined("image of top simplex " + std::to_string(s) + " of K is not a top simplex of Z'");
    image_of[s] = it->second;
    local[s] = r.k_orientation[s] * sort_sign(y) * target_orientation[it->second];
    if (flip[comp[s]] == 0) flip[comp[s]] = local[s];
  }
  for (std::size_t s = 0; s < k.complex.size(); ++s) {
    const int c = flip[comp[s]] == 0 ? 1 : flip[comp[s]];
    r.k_orientation[s] *= c;
    local[s] *= c;
  }

  // Per component and in total, the signed count must not depend on tau.
  std::vector<std::vector<long>> per_comp(ncomp, std::vector<long>(target.size(), 0));
  r.signed_count.assign(target.size(), 0);
  r.unsigned_count.assign(target.size(), 0);
  for (std::size_t s = 0; s < k.complex.size(); ++s) {
    if (image_of[s] < 0) continue;
    per_comp[comp[s]][image_of[s]] += local[s];
    r.signed_count[image_of[s]] += local[s];
    ++r.unsigned_count[image_of[s]];
  }
  auto constant = [&](const std::vector<long>& counts, const std::string& what) {
    for (std::size_t t = 1; t < counts.size(); ++t)
      if (counts[t] != counts[0]) {
        std::ostringstream os;
        os << what << ": " << counts[0] << " preimages over Z' simplex 0, " << counts[t] << " over simplex " << t;
        throw DegreeNotConstant(os.str());
      }
    return counts.empty() ? 0L : counts[0];
  };
  for (int c = 0; c < ncomp; ++c)
    r.component_degrees.push_back(constant(per_comp[c], "component " + std::to_string(c)));
  r.degree = constant(r.signed_count, "total");
  for (std::size_t t = 0; t < target.size(); ++t)
    if (r.unsigned_count[t] != r.signed_count[t])
      throw DegreeNotConstant("local degrees of mixed sign over Z' simplex " + std::to_string(t));

  std::vector<long> cells_over(z.num_top(), 0);
  for (const auto& v : cover.cells) ++cells_over[v.sigma];
  r.fiber_matches_cells = true;
  for (std::size_t t = 0; t < target.size(); ++t)
    if (r.unsigned_count[t] != cells_over[z.subdivision().parent[t]]) r.fiber_matches_cells = false;

  std::uint64_t h = 1469598103934665603ULL;
  for (long x : r.signed_count) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(x >> (8 * b)) & 0xffu;
      h *= 1099511628211ULL;
    }
  }
  r.checksum = h;
  return r;
}

}  // namespace realizer
