#include "realizer/permutahedron.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace realizer {

namespace {

void extend_chains(int n, int remaining, Chain& current, std::vector<Chain>& out,
                   const std::vector<ColorSet>& subsets) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (ColorSet s : subsets) {
    if (!current.empty() && !current.back().proper_subset_of(s)) continue;
    current.push_back(s);
    extend_chains(n, remaining - 1, current, out, subsets);
    current.pop_back();
  }
}

}  // namespace

std::vector<ColorSet> proper_subsets(int n) {
  std::vector<ColorSet> out;
  const std::uint32_t full = ColorSet::full(n).bits;
  for (std::uint32_t b = 1; b < full; ++b) out.push_back({b});
  std::sort(out.begin(), out.end(), subset_order_less);
  return out;
}

bool facets_intersect(ColorSet a, ColorSet b) { return a.subset_of(b) || b.subset_of(a); }

bool is_chain(const Chain& c, int n) {
  const ColorSet full = ColorSet::full(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].empty() || !c[i].proper_subset_of(full)) return false;
    if (i > 0 && !c[i - 1].proper_subset_of(c[i])) return false;
  }
  return true;
}

bool chain_less(const Chain& a, const Chain& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), subset_order_less);
}

std::vector<Chain> enumerate_faces(int n, int codim) {
  std::vector<Chain> out;
  Chain current;
  extend_chains(n, codim, current, out, proper_subsets(n));
  std::sort(out.begin(), out.end(), chain_less);
  return out;
}

std::vector<Chain> containing_faces(const Chain& c) {
  std::vector<Chain> out;
  const std::size_t k = c.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Chain sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) sub.push_back(c[i]);
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
    return a.size() != b.size() ? a.size() < b.size() : chain_less(a, b);
  });
  return out;
}

std::vector<Chain> contained_faces(const Chain& c, int n) {
  std::vector<Chain> out;
  for (int k = static_cast<int>(c.size()); k <= n; ++k)
    for (auto& ch : enumerate_faces(n, k))
      if (std::includes(ch.begin(), ch.end(), c.begin(), c.end(), subset_order_less)) out.push_back(std::move(ch));
  return out;
}

std::string to_string(const Chain& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "<" : "") << to_string(c[i]);
  os << ')';
  return os.str();
}

std::vector<std::uint32_t> Permutahedron::key(const Chain& c) {
  std::vector<std::uint32_t> k;
  k.reserve(c.size());
  for (ColorSet s : c) k.push_back(s.bits);
  return k;
}

Permutahedron::Permutahedron(int n) : n_(n), subsets_(proper_subsets(n)) {
  for (std::size_t i = 0; i < subsets_.size(); ++i) subset_index_.emplace(subsets_[i].bits, static_cast<int>(i));
  for (int k = 0; k <= n; ++k)
    for (auto& c : enumerate_faces(n, k)) {
      face_id_.emplace(key(c), static_cast<int>(faces_.size()));
      faces_.push_back(std::move(c));
    }
  facet_indices_.resize(faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f)
    for (ColorSet s : faces_[f]) facet_indices_[f].push_back(subset_index(s));

  // A flag refines a vertex chain by choosing the order its n subsets are added.
  std::vector<int> order(n);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (codim(static_cast<int>(f)) != n) continue;
    const Chain& vertex = faces_[f];
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<int> flag{0};
      Chain partial;
      for (int idx : order) {
        partial.insert(std::upper_bound(partial.begin(), partial.end(), vertex[idx],
                                        [](ColorSet a, ColorSet b) { return a.proper_subset_of(b); }),
                       vertex[idx]);
        flag.push_back(face_id(partial));
      }
      flags_.push_back(std::move(flag));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

std::size_t Permutahedron::num_faces_of_codim(int k) const {
  return static_cast<std::size_t>(
      std::count_if(faces_.begin(), faces_.end(), [k](const Chain& c) { return static_cast<int>(c.size()) == k; }));
}

AbstractComplex barycentric_triangulation(const Permutahedron& p) {
  return AbstractComplex(p.dim(), static_cast<int>(p.faces().size()), p.flags());
}

}  // namespace realizer
