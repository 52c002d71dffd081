#ifndef G3TRR_QMATRIX_HPP
#define G3TRR_QMATRIX_HPP

#include <cstddef>
#include <vector>

#include "g3trr/rational.hpp"

namespace g3trr {

// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const QMatrix& o) const = default;

 private:
  size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  QMatrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
};

// Reduced row-echelon form by exact Gauss-Jordan elimination. The pivot in
// each column is chosen among nonzero candidates as the entry of smallest
// combined numerator/denominator bit length, which keeps intermediate
// fractions from ballooning.
RrefResult rref(const QMatrix& m);

// Solves coeffs * x = rhs for a square or over-determined system with a
// unique solution. Throws SingularSystem when rank < number of unknowns and
// InconsistentSystem when the augmented system has no solution.
std::vector<Rational> solve_unique(const QMatrix& coeffs,
                                   const std::vector<Rational>& rhs);

QMatrix matmul(const QMatrix& a, const QMatrix& b);

}  // namespace g3trr

#endif
