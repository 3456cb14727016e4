#pragma once

#include <vector>

#include "nilform/poly.hpp"
#include "nilform/qmatrix.hpp"

namespace nilform {

// Dense matrix over Q[t], row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);

  // Entrywise constant embedding of a rational matrix.
  static PolyMatrix constant(const QMatrix& m);
  // t*I - M, the characteristic matrix of M.
  static PolyMatrix characteristic(const QMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Poly& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  PolyMatrix drop_col(int j) const;
  bool operator==(const PolyMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> a_;
};

// Determinant of a square matrix over Q[t] by fraction-free elimination.
Poly poly_det(const PolyMatrix& m);

// Invariant factors of the matrix over the PID Q[t]: the nonunit diagonal
// entries of the Smith normal form, monic, each dividing the next.
std::vector<Poly> smith_divisors(const PolyMatrix& m);

}  // namespace nilform
