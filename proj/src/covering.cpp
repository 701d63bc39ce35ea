#include "realizer/covering.hpp"

#include <sstream>

#include "realizer/errors.hpp"

namespace realizer {

namespace {

std::string cell_str(const CoverCell& v) {
  std::ostringstream os;
  os << "(sigma=" << v.sigma << ", tuple=" << v.tuple << ", g=" << v.g.bits << ')';
  return os.str();
}

std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

// Builds the complex from a cell list and a lookup, gluing facet s of each
// cell to phi_s of it.
CoverComplex glue_cells(CoverSpace& space, std::vector<CoverCell> cells,
                        const std::unordered_map<CoverCell, int, CoverCellHash>& index) {
  PermutahedralComplex pc(space.polytope_ptr(), cells.size());
  const int ns = static_cast<int>(space.subsets().size());
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (int s = 0; s < ns; ++s) {
      const CoverCell w = space.phi(s, cells[a]);
      const auto it = index.find(w);
      if (it == index.end())
        throw InconsistentGluing("Phi_" + to_string(space.subsets()[s]) + " maps " + cell_str(cells[a]) +
                                 " outside the cell set");
      if (pc.neighbor(static_cast<int>(a), s) < 0) pc.glue(static_cast<int>(a), s, it->second);
      else if (pc.neighbor(static_cast<int>(a), s) != it->second)
        throw InconsistentGluing("Phi_" + to_string(space.subsets()[s]) + " is not an involution at " +
                                 cell_str(cells[a]));
    }
  return CoverComplex{std::move(pc), std::move(cells)};
}

}  // namespace

int InvolutionRegistry::intern(const Involution& lambda) {
  const auto [it, inserted] = index_.emplace(lambda.image, static_cast<int>(items_.size()));
  if (inserted) items_.push_back(lambda);
  return it->second;
}

int InvolutionRegistry::conjugate(int a, int b) {
  const std::uint64_t key = pair_key(a, b);
  if (const auto it = conj_.find(key); it != conj_.end()) return it->second;
  const int id = intern(realizer::conjugate(items_[a], items_[b]));
  conj_.emplace(key, id);
  return id;
}

std::pair<int, bool> TupleRegistry::intern(const std::vector<int>& tuple) {
  const auto [it, inserted] = index_.emplace(tuple, static_cast<int>(items_.size()));
  if (inserted) items_.push_back(tuple);
  return {it->second, inserted};
}

CoverSpace::CoverSpace(const ColoredPseudomanifold& z)
    : z_(&z), polytope_(std::make_shared<const Permutahedron>(z.dim())) {
  const auto& subs = subsets();
  subsets_inside_.resize(subs.size());
  for (std::size_t w = 0; w < subs.size(); ++w)
    for (std::size_t g = 0; g < subs.size(); ++g)
      if (subs[g].subset_of(subs[w])) subsets_inside_[w].push_back(static_cast<int>(g));
  std::vector<Involution> canonical;
  for (ColorSet s : subs) canonical.push_back(canonical_involution(z, s));
  canonical_tuple_ = register_tuple(canonical);
}

void CoverSpace::check_membership(int involution, int subset) {
  const std::uint64_t key = pair_key(involution, subset);
  if (verified_.count(key)) return;
  if (!is_in_P_omega(*z_, involutions_.get(involution), subsets()[subset]))
    throw InvalidCell("involution " + std::to_string(involution) + " is not in P_" + to_string(subsets()[subset]));
  verified_.insert(key);
}

int CoverSpace::register_tuple(const std::vector<Involution>& tuple) {
  std::vector<int> ids;
  ids.reserve(tuple.size());
  for (const auto& lambda : tuple) ids.push_back(involutions_.intern(lambda));
  return register_tuple_ids(ids);
}

int CoverSpace::register_tuple_ids(const std::vector<int>& ids) {
  if (ids.size() != subsets().size()) throw InvalidCell("tuple needs one involution per facet subset");
  const auto [id, inserted] = tuples_.intern(ids);
  if (inserted)
    for (std::size_t s = 0; s < ids.size(); ++s) check_membership(ids[s], static_cast<int>(s));
  return id;
}

CoverCell CoverSpace::canonical_seed() const {
  const auto& top = z_->complex().top();
  int best = 0;
  for (std::size_t s = 1; s < top.size(); ++s)
    if (top[s] < top[best]) best = static_cast<int>(s);
  return CoverCell{best, canonical_tuple_, GroupElem{}};
}

bool CoverSpace::in_V(const CoverCell& v) const {
  if (v.sigma < 0 || static_cast<std::size_t>(v.sigma) >= z_->num_top()) return false;
  if (v.tuple < 0 || static_cast<std::size_t>(v.tuple) >= tuples_.size()) return false;
  if (v.g.bits >> z_->dim()) return false;
  return z_->parts()[v.sigma] == eta(v.g);
}

CoverCell CoverSpace::make_cell(int sigma, int tuple, GroupElem g) const {
  const CoverCell v{sigma, tuple, g};
  if (!in_V(v)) throw InvalidCell("cell " + cell_str(v) + " is not in V");
  return v;
}

CoverCell CoverSpace::phi(int subset, const CoverCell& v) {
  const std::vector<int>& tuple = tuples_.get(v.tuple);
  const int lambda = tuple[subset];
  std::vector<int> next = tuple;
  for (int g : subsets_inside_[subset]) next[g] = involutions_.conjugate(lambda, tuple[g]);
  const int id = register_tuple_ids(next);
  return CoverCell{involutions_.get(lambda)(v.sigma), id, v.g * GroupElem::generator(subsets()[subset].size())};
}

CoverComplex build_component(CoverSpace& space, const CoverCell& seed, std::size_t max_cells) {
  if (!space.in_V(seed)) throw InvalidCell("seed " + cell_str(seed) + " is not in V");
  std::vector<CoverCell> cells{seed};
  std::unordered_map<CoverCell, int, CoverCellHash> index{{seed, 0}};
  const int ns = static_cast<int>(space.subsets().size());
  for (std::size_t head = 0; head < cells.size(); ++head)
    for (int s = 0; s < ns; ++s) {
      const CoverCell w = space.phi(s, cells[head]);
      if (index.count(w)) continue;
      if (cells.size() >= max_cells)
        throw CapExceeded("component exceeds " + std::to_string(max_cells) + " cells (frontier " +
                          std::to_string(cells.size() - head) + ")");
      index.emplace(w, static_cast<int>(cells.size()));
      cells.push_back(w);
    }
  return glue_cells(space, std::move(cells), index);
}

CoverComplex build_full(CoverSpace& space, std::size_t max_cells, std::size_t matching_cap) {
  const auto& z = space.base();
  const auto& subs = space.subsets();
  std::vector<std::vector<int>> choices(subs.size());
  // |V| = |U| * prod |P| * 2^(n-1); checked against the cap without overflow.
  std::size_t total = z.num_top() << (z.dim() - 1);
  for (std::size_t s = 0; s < subs.size(); ++s) {
    for (const auto& lambda : enumerate_P_omega(z, subs[s], matching_cap))
      choices[s].push_back(space.involutions().intern(lambda));
    if (choices[s].empty()) throw InvalidCell("P_" + to_string(subs[s]) + " is empty");
    if (total > max_cells / choices[s].size())
      throw CapExceeded("full cover exceeds " + std::to_string(max_cells) + " cells");
    total *= choices[s].size();
  }
  if (total > max_cells) throw CapExceeded("full cover exceeds " + std::to_string(max_cells) + " cells");

  std::vector<CoverCell> cells;
  cells.reserve(total);
  std::unordered_map<CoverCell, int, CoverCellHash> index;
  std::vector<std::size_t> digit(subs.size(), 0);
  std::vector<int> ids(subs.size());
  for (;;) {
    for (std::size_t s = 0; s < subs.size(); ++s) ids[s] = choices[s][digit[s]];
    const int tuple = space.register_tuple_ids(ids);
    for (std::size_t sigma = 0; sigma < z.num_top(); ++sigma)
      for (std::uint32_t g = 0; g < (1u << z.dim()); ++g) {
        const CoverCell v{static_cast<int>(sigma), tuple, GroupElem{g}};
        if (!space.in_V(v)) continue;
        index.emplace(v, static_cast<int>(cells.size()));
        cells.push_back(v);
      }
    // Mixed-radix increment, last subset fastest.
    std::size_t pos = subs.size();
    while (pos > 0 && ++digit[pos - 1] == choices[pos - 1].size()) digit[--pos] = 0;
    if (pos == 0) break;
  }
  return glue_cells(space, std::move(cells), index);
}

std::vector<CoverComplex> split_components(const CoverComplex& cover) {
  const auto& pc = cover.pc;
  const int ns = static_cast<int>(pc.num_subsets());
  std::vector<int> comp(pc.num_cells(), -1);
  std::vector<int> local(pc.num_cells(), -1);
  std::vector<std::vector<int>> members;
  for (std::size_t a0 = 0; a0 < pc.num_cells(); ++a0) {
    if (comp[a0] >= 0) continue;
    const int c = static_cast<int>(members.size());
    members.push_back({static_cast<int>(a0)});
    comp[a0] = c;
    local[a0] = 0;
    auto& m = members.back();
    for (std::size_t head = 0; head < m.size(); ++head)
      for (int s = 0; s < ns; ++s) {
        const int b = pc.neighbor(m[head], s);
        if (b >= 0 && comp[b] < 0) {
          comp[b] = c;
          local[b] = static_cast<int>(m.size());
          m.push_back(b);
        }
      }
  }
  std::vector<CoverComplex> out;
  for (const auto& m : members) {
    PermutahedralComplex sub(pc.polytope_ptr(), m.size());
    std::vector<CoverCell> cells;
    for (std::size_t i = 0; i < m.size(); ++i) {
      cells.push_back(cover.cells[m[i]]);
      for (int s = 0; s < ns; ++s) {
        const int b = pc.neighbor(m[i], s);
        if (b >= 0 && sub.neighbor(static_cast<int>(i), s) < 0) sub.glue(static_cast<int>(i), s, local[b]);
      }
    }
    out.push_back(CoverComplex{std::move(sub), std::move(cells)});
  }
  return out;
}

CoveringReport verify_covering(const CoverComplex& cover, const PermutahedralComplex& tomei) {
  const auto& pc = cover.pc;
  const int n = pc.dim();
  if (tomei.dim() != n) throw NotACovering("dimension mismatch");
  const std::size_t base_cells = std::size_t{1} << n;
  const auto& subs = pc.polytope().subsets();

  // Each cell maps onto a cell of M by the identity of the polytope; gluings
  // must be carried to gluings.
  for (std::size_t a = 0; a < pc.num_cells(); ++a) {
    const GroupElem g = covering_map(cover.cells[a]);
    if (g.bits >= base_cells) throw NotACovering("cell " + cell_str(cover.cells[a]) + " maps outside M");
    for (std::size_t s = 0; s < subs.size(); ++s) {
      const int b = pc.neighbor(static_cast<int>(a), static_cast<int>(s));
      if (b < 0) throw NotACovering("facet " + to_string(subs[s]) + " of " + cell_str(cover.cells[a]) + " is free");
      const GroupElem expected = g * GroupElem::generator(subs[s].size());
      if (covering_map(cover.cells[b]) != expected ||
          tomei.neighbor(static_cast<int>(g.bits), static_cast<int>(s)) != static_cast<int>(expected.bits))
        throw NotACovering("gluing across " + to_string(subs[s]) + " at " + cell_str(cover.cells[a]) +
                           " is not carried to the gluing of M");
    }
  }

  // Face classes: each class upstairs lands in one class downstairs, injectively
  // on cells; the number of classes over each class downstairs is constant.
  const FaceClasses up = face_classes(pc);
  const FaceClasses down = face_classes(tomei);
  const std::size_t nf = pc.polytope().faces().size();
  std::vector<int> image(up.classes.size(), -1);
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t a = 0; a < pc.num_cells(); ++a) {
    const int ga = static_cast<int>(covering_map(cover.cells[a]).bits);
    for (std::size_t f = 0; f < nf; ++f) {
      const int u = up.of(pc, static_cast<int>(a), static_cast<int>(f));
      const int d = down.of(tomei, ga, static_cast<int>(f));
      if (image[u] < 0) image[u] = d;
      if (image[u] != d)
        throw NotACovering("face class of " + to_string(pc.polytope().faces()[f]) + " at " +
                           cell_str(cover.cells[a]) + " meets two face classes of M");
      if (!seen.insert(pair_key(u, ga)).second)
        throw NotACovering("face class of " + to_string(pc.polytope().faces()[f]) + " at " +
                           cell_str(cover.cells[a]) + " folds onto M");
    }
  }
  for (std::size_t u = 0; u < up.classes.size(); ++u)
    if (up.classes[u].orbit_size != down.classes[image[u]].orbit_size)
      throw NotACovering("orbit size mismatch over face class " + std::to_string(image[u]));

  if (pc.num_cells() % base_cells != 0)
    throw NotACovering(std::to_string(pc.num_cells()) + " cells is not a multiple of " + std::to_string(base_cells));
  const std::size_t degree = pc.num_cells() / base_cells;
  std::vector<std::size_t> fiber(down.classes.size(), 0);
  for (int d : image) ++fiber[d];
  for (std::size_t d = 0; d < fiber.size(); ++d)
    if (fiber[d] != degree)
      throw NotACovering("fiber over face class " + std::to_string(d) + " has " + std::to_string(fiber[d]) +
                         " classes, expected " + std::to_string(degree));
  return CoveringReport{pc.num_cells(), degree, up.classes.size()};
}

}  // namespace realizer
