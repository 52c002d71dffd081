#include "g3trr/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace g3trr {

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.reduced = m;
  QMatrix& a = res.reduced;
  const size_t rows = a.rows(), cols = a.cols();

  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    // smallest nonzero candidate by bit size
    size_t pivot = rows;
    size_t best_bits = 0;
    for (size_t i = row; i < rows; ++i) {
      if (a.at(i, col).is_zero()) continue;
      size_t bits = a.at(i, col).bit_size();
      if (pivot == rows || bits < best_bits) {
        pivot = i;
        best_bits = bits;
      }
    }
    if (pivot == rows) continue;

    if (pivot != row) {
      for (size_t j = 0; j < cols; ++j)
        std::swap(a.at(pivot, j), a.at(row, j));
    }
    Rational inv = Rational(1) / a.at(row, col);
    for (size_t j = col; j < cols; ++j) a.at(row, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Rational f = a.at(i, col);
      for (size_t j = col; j < cols; ++j)
        a.at(i, j) -= f * a.at(row, j);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::vector<Rational> solve_unique(const QMatrix& coeffs,
                                   const std::vector<Rational>& rhs) {
  const size_t rows = coeffs.rows(), n = coeffs.cols();
  if (rhs.size() != rows)
    throw std::invalid_argument("solve_unique: rhs size mismatch");
  if (rows < n)
    throw SingularSystem("solve_unique: fewer equations than unknowns");

  QMatrix aug(rows, n + 1);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = coeffs.at(i, j);
    aug.at(i, n) = rhs[i];
  }
  RrefResult r = rref(aug);

  bool rhs_pivot = !r.pivot_cols.empty() && r.pivot_cols.back() == n;
  size_t coeff_rank = r.rank - (rhs_pivot ? 1 : 0);
  if (rhs_pivot)
    throw InconsistentSystem("solve_unique: augmented rank exceeds rank");
  if (coeff_rank < n)
    throw SingularSystem("solve_unique: rank " + std::to_string(coeff_rank) +
                         " < " + std::to_string(n) + " unknowns");

  std::vector<Rational> x(n);
  for (size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced.at(i, n);
  return x;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape");
  QMatrix c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

}  // namespace g3trr
