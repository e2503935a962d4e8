#include "smoothness/poly_matrix.hpp"

namespace smoothness {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols) {
  data_.assign(rows * cols, Poly::zero(ring_));
}

PolyMatrix PolyMatrix::jacobian(const std::vector<Poly>& F) {
  if (F.empty()) throw std::invalid_argument("jacobian of empty family");
  const Ring& R = F.front().ring();
  PolyMatrix J(R, F.size(), R.var_count());
  for (std::size_t i = 0; i < F.size(); ++i) {
    R.require_compatible(F[i].ring());
    for (std::size_t j = 0; j < R.var_count(); ++j)
      J.set(i, j, F[i].derivative(j));
  }
  return J;
}

const Poly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return data_[r * cols_ + c];
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly p) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  ring_.require_compatible(p.ring());
  data_[r * cols_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::submatrix(const MinorSelection& sel) const {
  PolyMatrix S(ring_, sel.rows.size(), sel.cols.size());
  for (std::size_t i = 0; i < sel.rows.size(); ++i)
    for (std::size_t j = 0; j < sel.cols.size(); ++j)
      S.set(i, j, at(sel.rows[i], sel.cols[j]));
  return S;
}

Poly PolyMatrix::minor(const MinorSelection& sel) const {
  return submatrix(sel).determinant();
}

namespace {

// Laplace expansion along the first remaining row; `live_cols` marks the
// active columns. Fine at the small sizes the descent produces.
Poly det_rec(const PolyMatrix& M, std::size_t row,
             std::vector<std::size_t>& live_cols) {
  const Ring& R = M.ring();
  if (live_cols.empty()) return Poly::constant(R, 1);
  Poly acc = Poly::zero(R);
  for (std::size_t k = 0; k < live_cols.size(); ++k) {
    const Poly& entry = M.at(row, live_cols[k]);
    if (entry.is_zero()) continue;
    std::size_t col = live_cols[k];
    live_cols.erase(live_cols.begin() + static_cast<std::ptrdiff_t>(k));
    Poly sub = det_rec(M, row + 1, live_cols);
    live_cols.insert(live_cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    Poly contrib = entry * sub;
    acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}

}  // namespace

Poly PolyMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("determinant of non-square matrix");
  std::vector<std::size_t> cols(cols_);
  for (std::size_t i = 0; i < cols_; ++i) cols[i] = i;
  return det_rec(*this, 0, cols);
}

PolyMatrix PolyMatrix::adjugate() const {
  if (rows_ != cols_)
    throw std::invalid_argument("adjugate of non-square matrix");
  std::size_t n = rows_;
  PolyMatrix A(ring_, n, n);
  if (n == 0) return A;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      MinorSelection sel;
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) sel.rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) sel.cols.push_back(c);
      Poly cof = minor(sel);
      A.set(i, j, ((i + j) % 2 == 0) ? cof : -cof);
    }
  }
  return A;
}

PolyMatrix PolyMatrix::times(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix P(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Poly s = Poly::zero(ring_);
      for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
      P.set(i, j, std::move(s));
    }
  return P;
}

std::vector<std::vector<std::size_t>> index_combinations(std::size_t n,
                                                         std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (r == 0) break;
    // Advance to the next combination.
    std::size_t i = r;
    while (i-- > 0) {
      if (cur[i] != i + n - r) {
        ++cur[i];
        for (std::size_t k = i + 1; k < r; ++k) cur[k] = cur[k - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
  return out;
}

std::vector<MinorSelection> nonzero_minor_selections(const PolyMatrix& J,
                                                     std::size_t r,
                                                     const Ideal& I_X) {
  std::vector<MinorSelection> out;
  if (r > J.rows() || r > J.cols()) return out;
  auto row_sets = index_combinations(J.rows(), r);
  auto col_sets = index_combinations(J.cols(), r);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      MinorSelection sel{rs, cs};
      Poly det = J.minor(sel);
      if (det.is_zero()) continue;
      if (groebner::normal_form(det, I_X.basis()).is_zero()) continue;
      out.push_back(std::move(sel));
    }
  return out;
}

}  // namespace smoothness
