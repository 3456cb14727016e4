#pragma once

#include <vector>

#include "nilform/poly.hpp"
#include "nilform/rational.hpp"

namespace nilform {

using QVec = std::vector<Rational>;

QVec qvec_zero(int n);
QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const QVec& a, const Rational& s);
bool qvec_is_zero(const QVec& a);

// Dense matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVec>& rows);
  static QMatrix from_cols(const std::vector<QVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& s) const;
  bool operator==(const QMatrix& o) const;
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  QVec apply(const QVec& v) const;  // matrix times column vector
  QMatrix transpose() const;
  QVec row(int i) const;
  QVec col(int j) const;
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(QMatrix& m);

int rank(const QMatrix& m);

// Basis of the right kernel {v : Mv = 0}, echelon-normalized: one vector
// per free column, 1 in that coordinate.
std::vector<QVec> kernel_basis(const QMatrix& m);

// Solves Mx = rhs. Throws std::domain_error("no solution") or
// std::domain_error("solution not unique").
QVec solve_unique(const QMatrix& m, const QVec& rhs);

// Inverse of a square nonsingular matrix; throws if singular.
QMatrix inverse(const QMatrix& m);

Rational determinant(const QMatrix& m);

// Characteristic polynomial det(tI - M), monic of degree n.
Poly char_poly(const QMatrix& m);

// Companion matrix of a monic polynomial f of degree m >= 1: the matrix of
// multiplication by t on the power basis 1, t, ..., t^(m-1) of Q[t]/(f).
QMatrix companion_matrix(const Poly& f);

// Block-diagonal companion matrix of a list of monic polynomials: the
// module action of t on the direct sum of the cyclic pieces.
QMatrix block_companion(const std::vector<Poly>& fs);

}  // namespace nilform
