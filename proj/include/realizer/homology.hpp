#pragma once

// Integral simplicial homology: boundary matrices, Smith normal form, and
// chain-level fundamental classes and push-forwards.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "realizer/pseudomanifold.hpp"

namespace realizer {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  IntMatrix d;                           // u * m * v
  IntMatrix u;                           // unimodular, rows x rows
  IntMatrix v;                           // unimodular, cols x cols
  std::vector<BigInt> invariant_factors; // nonzero diagonal entries, each dividing the next
};

/// Diagonalizes m by unimodular row and column operations. Without
/// transforms, u and v are left empty.
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = true);

/// Diagonal, nonnegative, nonzero entries first and each dividing the next.
bool is_smith_form(const IntMatrix& d);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// Column-major sparse matrix with small entries; columns sorted by row.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<int, long>>> columns;
};

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);
bool is_zero(const SparseIntMatrix& m);
std::vector<long> apply(const SparseIntMatrix& m, const std::vector<long>& x);
IntMatrix to_dense(const SparseIntMatrix& m);

/// Nonzero invariant factors. Unit pivots are eliminated sparsely (int64 with
/// overflow checks, throwing Overflow); the remainder goes through the dense
/// arbitrary-precision Smith form.
std::vector<BigInt> invariant_factors(const SparseIntMatrix& m);

struct ChainComplex {
  std::vector<std::vector<Simplex>> simplices;  // simplices[k]: sorted k-simplices
  std::vector<SparseIntMatrix> boundary;        // boundary[k]: C_k -> C_{k-1}; boundary[0] is 0 x |C_0|
};

/// Signed incidence from sorted vertex order: d[v0..vk] = sum (-1)^i [.. vi omitted ..].
ChainComplex boundary_matrices(const AbstractComplex& c);

struct HomologySummary {
  std::vector<long> betti;
  std::vector<std::vector<BigInt>> torsion;  // invariant factors > 1 per dimension

  long euler() const;
  /// "(Z, Z^4 + Z/2, Z)"
  std::string to_string() const;
};

HomologySummary homology(const AbstractComplex& c);
HomologySummary homology(const ChainComplex& cc);

/// The n-chain sum of sign(sigma) * sigma. Throws NonOrientable when the
/// orientation is not coherent; the one-argument form orients first.
std::vector<long> fundamental_class(const AbstractComplex& c, const Orientation& o);
std::vector<long> fundamental_class(const AbstractComplex& c);

/// Chain-level image of an n-chain under a simplicial vertex map; degenerate
/// simplices contribute nothing. Coefficients refer to the target's top
/// simplices in sorted vertex order.
std::vector<long> push_forward(const AbstractComplex& source, const std::vector<long>& chain,
                               const std::vector<int>& vertex_image, const AbstractComplex& target);

}  // namespace realizer
