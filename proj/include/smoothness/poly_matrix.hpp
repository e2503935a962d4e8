#pragma once

#include <vector>

#include "groebner/ideal.hpp"

namespace smoothness {

using groebner::Ideal;
using polyalg::Poly;
using polyalg::Ring;

/// Selection of equally many rows and columns, each strictly increasing.
/// The empty selection (r = 0) denotes the 0x0 submatrix with
/// determinant 1.
struct MinorSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t size() const { return rows.size(); }
  bool operator==(const MinorSelection& o) const {
    return rows == o.rows && cols == o.cols;
  }
};

/// Dense rectangular matrix of polynomials over a common ring.
class PolyMatrix {
 public:
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);

  /// Jacobian of F: entry (i, j) = d f_i / d x_j.
  static PolyMatrix jacobian(const std::vector<Poly>& F);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Poly& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Poly p);

  PolyMatrix submatrix(const MinorSelection& sel) const;
  Poly minor(const MinorSelection& sel) const;

  /// Determinant (square matrices; the 0x0 determinant is 1).
  Poly determinant() const;

  /// Adjugate A with A * M = M * A = det(M) * identity as an exact
  /// polynomial identity.
  PolyMatrix adjugate() const;

  PolyMatrix times(const PolyMatrix& o) const;

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> data_;
};

/// All r x r selections of J whose determinant is nonzero modulo I_X
/// (normal form against the cached basis), in lexicographic order of
/// (row_indices, col_indices). For r = 0 the single empty selection.
std::vector<MinorSelection> nonzero_minor_selections(const PolyMatrix& J,
                                                     std::size_t r,
                                                     const Ideal& I_X);

/// All index combinations of size r from {0, ..., n-1}, lexicographic.
std::vector<std::vector<std::size_t>> index_combinations(std::size_t n,
                                                         std::size_t r);

}  // namespace smoothness
