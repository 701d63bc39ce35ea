#include "realizer/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "realizer/errors.hpp"
#include "realizer/tomei.hpp"

namespace realizer {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

struct Elimination {
  IntMatrix& a;
  IntMatrix* u;
  IntMatrix* v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c) std::swap((*u)(i, c), (*u)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if (v)
      for (std::size_t r = 0; r < v->rows(); ++r) std::swap((*v)(r, i), (*v)(r, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(j, c) != 0) a(i, c) += q * a(j, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c)
        if ((*u)(j, c) != 0) (*u)(i, c) += q * (*u)(j, c);
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, j) != 0) a(r, i) += q * a(r, j);
    if (v)
      for (std::size_t r = 0; r < v->rows(); ++r)
        if ((*v)(r, j) != 0) (*v)(r, i) += q * (*v)(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c) (*u)(i, c) = -(*u)(i, c);
  }
};

long checked_sub_mul(long x, long f, long y) {
  long prod = 0;
  long out = 0;
  if (__builtin_mul_overflow(f, y, &prod) || __builtin_sub_overflow(x, prod, &out))
    throw Overflow("entry overflow during sparse elimination");
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  SmithForm out;
  out.d = m;
  if (with_transforms) {
    out.u = IntMatrix::identity(m.rows());
    out.v = IntMatrix::identity(m.cols());
  }
  IntMatrix& a = out.d;
  Elimination e{a, with_transforms ? &out.u : nullptr, with_transforms ? &out.v : nullptr};
  const std::size_t lim = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < lim; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = a.rows(), pj = a.cols();
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j)
        if (a(i, j) != 0 && (pi == a.rows() || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == a.rows()) break;
    e.swap_rows(t, pi);
    e.swap_cols(t, pj);
    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i)
        if (a(i, t) != 0) {
          e.add_row(i, t, -(a(i, t) / a(t, t)));
          residue = residue || a(i, t) != 0;
        }
      for (std::size_t j = t + 1; j < a.cols(); ++j)
        if (a(t, j) != 0) {
          e.add_col(j, t, -(a(t, j) / a(t, t)));
          residue = residue || a(t, j) != 0;
        }
      if (residue) {
        // A remainder smaller than the pivot is left; move the smallest in.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        e.swap_rows(t, bi);
        e.swap_cols(t, bj);
        continue;
      }
      // Row and column cleared; enforce divisibility of the trailing block.
      std::size_t bad = a.rows();
      for (std::size_t i = t + 1; i < a.rows() && bad == a.rows(); ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == a.rows()) break;
      e.add_row(t, bad, 1);
    }
    if (a(t, t) < 0) e.negate_row(t);
    out.invariant_factors.push_back(a(t, t));
  }
  return out;
}

bool is_smith_form(const IntMatrix& d) {
  const std::size_t lim = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  bool zero_seen = false;
  for (std::size_t i = 0; i < lim; ++i) {
    if (d(i, i) < 0) return false;
    if (d(i, i) == 0) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;
    if (i > 0 && d(i, i) % d(i - 1, i - 1) != 0) return false;
  }
  return true;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw Error("shape mismatch in sparse product");
  SparseIntMatrix c{a.rows, b.cols, std::vector<std::vector<std::pair<int, long>>>(b.cols)};
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::map<int, long> acc;
    for (auto [k, bv] : b.columns[j])
      for (auto [i, av] : a.columns[k]) acc[i] += av * bv;
    for (auto [i, v] : acc)
      if (v != 0) c.columns[j].emplace_back(i, v);
  }
  return c;
}

bool is_zero(const SparseIntMatrix& m) {
  for (const auto& col : m.columns)
    for (auto [i, v] : col)
      if (v != 0) return false;
  return true;
}

std::vector<long> apply(const SparseIntMatrix& m, const std::vector<long>& x) {
  std::vector<long> y(m.rows, 0);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (auto [i, v] : m.columns[j]) y[i] += v * x[j];
  return y;
}

IntMatrix to_dense(const SparseIntMatrix& m) {
  IntMatrix d(m.rows, m.cols);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (auto [i, v] : m.columns[j]) d(i, j) = v;
  return d;
}

std::vector<BigInt> invariant_factors(const SparseIntMatrix& m) {
  std::vector<std::map<int, long>> cols(m.cols);
  std::vector<std::set<int>> rows(m.rows);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (auto [i, v] : m.columns[j])
      if (v != 0) {
        cols[j][i] = v;
        rows[i].insert(static_cast<int>(j));
      }

  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].empty()) continue;
      // Unit entry of column c whose row is sparsest.
      int r = -1;
      for (auto [i, v] : cols[c])
        if ((v == 1 || v == -1) && (r < 0 || rows[i].size() < rows[r].size())) r = i;
      if (r < 0) continue;
      const long p = cols[c][r];
      const std::vector<int> others(rows[r].begin(), rows[r].end());
      for (int c2 : others) {
        if (c2 == static_cast<int>(c)) continue;
        const long factor = cols[c2][r] * p;
        for (auto [i, v] : cols[c]) {
          auto it = cols[c2].find(i);
          const long next = checked_sub_mul(it == cols[c2].end() ? 0 : it->second, factor, v);
          if (next == 0) {
            if (it != cols[c2].end()) cols[c2].erase(it);
            rows[i].erase(c2);
          } else if (it == cols[c2].end()) {
            cols[c2].emplace(i, next);
            rows[i].insert(c2);
          } else {
            it->second = next;
          }
        }
      }
      for (auto [i, v] : cols[c]) rows[i].erase(static_cast<int>(c));
      cols[c].clear();
      ++units;
      progress = true;
    }
  }

  // Whatever is left has no unit entries.
  std::vector<int> live_rows, live_cols;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) live_rows.push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!cols[j].empty()) live_cols.push_back(static_cast<int>(j));
  std::vector<BigInt> out(units, BigInt(1));
  if (!live_cols.empty()) {
    std::unordered_map<int, std::size_t> row_pos;
    for (std::size_t i = 0; i < live_rows.size(); ++i) row_pos[live_rows[i]] = i;
    IntMatrix rest(live_rows.size(), live_cols.size());
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      for (auto [i, v] : cols[live_cols[j]]) rest(row_pos[i], j) = v;
    for (auto& f : smith_normal_form(rest, false).invariant_factors) out.push_back(f);
  }
  return out;
}

ChainComplex boundary_matrices(const AbstractComplex& c) {
  ChainComplex cc;
  cc.simplices = all_faces(c);
  const std::size_t n = cc.simplices.size();
  cc.boundary.resize(n);
  cc.boundary[0] = SparseIntMatrix{0, cc.simplices[0].size(), std::vector<std::vector<std::pair<int, long>>>(cc.simplices[0].size())};
  for (std::size_t k = 1; k < n; ++k) {
    std::unordered_map<Simplex, int, VectorHash> lower;
    for (std::size_t i = 0; i < cc.simplices[k - 1].size(); ++i) lower.emplace(cc.simplices[k - 1][i], static_cast<int>(i));
    SparseIntMatrix b{cc.simplices[k - 1].size(), cc.simplices[k].size(),
                      std::vector<std::vector<std::pair<int, long>>>(cc.simplices[k].size())};
    for (std::size_t j = 0; j < cc.simplices[k].size(); ++j) {
      const Simplex& s = cc.simplices[k][j];
      for (std::size_t i = 0; i < s.size(); ++i) b.columns[j].emplace_back(lower.at(drop_vertex(s, i)), i % 2 == 0 ? 1 : -1);
      std::sort(b.columns[j].begin(), b.columns[j].end());
    }
    cc.boundary[k] = std::move(b);
  }
  return cc;
}

long HomologySummary::euler() const {
  long chi = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * betti[k];
  return chi;
}

std::string HomologySummary::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (k) os << ", ";
    bool any = false;
    if (betti[k] > 0) {
      os << 'Z';
      if (betti[k] > 1) os << '^' << betti[k];
      any = true;
    }
    for (const auto& t : torsion[k]) {
      os << (any ? " + " : "") << "Z/" << t;
      any = true;
    }
    if (!any) os << '0';
  }
  os << ')';
  return os.str();
}

HomologySummary homology(const AbstractComplex& c) { return homology(boundary_matrices(c)); }

HomologySummary homology(const ChainComplex& cc) {
  const std::size_t n = cc.simplices.size();
  std::vector<std::vector<BigInt>> factors(n + 1);
  for (std::size_t k = 1; k < n; ++k) factors[k] = invariant_factors(cc.boundary[k]);
  HomologySummary h;
  for (std::size_t k = 0; k < n; ++k) {
    const long rank_out = static_cast<long>(factors[k].size());
    const long rank_in = static_cast<long>(factors[k + 1].size());
    h.betti.push_back(static_cast<long>(cc.simplices[k].size()) - rank_out - rank_in);
    std::vector<BigInt> tors;
    for (const auto& f : factors[k + 1])
      if (f > 1) tors.push_back(f);
    h.torsion.push_back(std::move(tors));
  }
  return h;
}

std::vector<long> fundamental_class(const AbstractComplex& c, const Orientation& o) {
  if (!is_coherent(c, o)) throw NonOrientable("orientation is not coherent");
  return std::vector<long>(o.begin(), o.end());
}

std::vector<long> fundamental_class(const AbstractComplex& c) { return fundamental_class(c, orient(c)); }

std::vector<long> push_forward(const AbstractComplex& source, const std::vector<long>& chain,
                               const std::vector<int>& vertex_image, const AbstractComplex& target) {
  std::unordered_map<Simplex, int, VectorHash> index;
  for (std::size_t t = 0; t < target.size(); ++t) index.emplace(target[t], static_cast<int>(t));
  std::vector<long> out(target.size(), 0);
  for (std::size_t s = 0; s < source.size(); ++s) {
    if (chain[s] == 0) continue;
    std::vector<int> y;
    for (int v : source[s]) y.push_back(vertex_image[v]);
    Simplex sorted = y;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    const auto it = index.find(sorted);
    if (it == index.end()) throw NotWellDefined("vertex map does not send top simplex " + std::to_string(s) + " to a top simplex");
    out[it->second] += chain[s] * sort_sign(y);
  }
  return out;
}

}  // namespace realizer
