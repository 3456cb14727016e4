#include "nilform/qmatrix.hpp"

#include <stdexcept>

namespace nilform {

QVec qvec_zero(int n) { return QVec(n, Rational(0)); }

QVec qvec_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVec qvec_scale(const QVec& a, const Rational& s) {
  QVec r = a;
  for (auto& x : r) x *= s;
  return r;
}

bool qvec_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  a_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_cols(const std::vector<QVec>& cols) {
  return from_rows(cols).transpose();
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rational& s) const {
  QMatrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

QVec QMatrix::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector size mismatch");
  QVec r = qvec_zero(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QVec QMatrix::row(int i) const {
  QVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

QVec QMatrix::col(int j) const {
  QVec r(rows_);
  for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const QMatrix& m) {
  QMatrix w = m;
  return static_cast<int>(rref(w).size());
}

std::vector<QVec> kernel_basis(const QMatrix& m) {
  QMatrix w = m;
  std::vector<int> pivots = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    QVec v = qvec_zero(m.cols());
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

QVec solve_unique(const QMatrix& m, const QVec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("rhs size mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c == m.cols()) throw std::domain_error("no solution");
  if (static_cast<int>(pivots.size()) < m.cols()) throw std::domain_error("solution not unique");
  QVec x = qvec_zero(m.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw std::domain_error("matrix is singular");
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix w = m;
  int n = w.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (w.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
      det = -det;
    }
    det *= w.at(c, c);
    Rational inv = Rational(1) / w.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (w.at(i, c) == 0) continue;
      Rational f = w.at(i, c) * inv;
      for (int j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  return det;
}

Poly char_poly(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char poly of non-square matrix");
  // Faddeev-LeVerrier: exact over Q, no pivoting decisions to audit.
  int n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix mk(n, n);  // zero
  QMatrix acc = QMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * (k == 1 ? QMatrix::identity(n) : acc);
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    Rational ck = -tr / Rational(static_cast<long>(k));
    c[n - k] = ck;
    acc = mk;
    for (int i = 0; i < n; ++i) acc.at(i, i) += ck;
  }
  return Poly(std::move(c));
}

QMatrix companion_matrix(const Poly& f) {
  if (f.is_zero() || f.lead() != 1) throw std::invalid_argument("companion matrix needs a monic polynomial");
  int m = f.degree();
  if (m < 1) throw std::invalid_argument("companion matrix needs degree >= 1");
  QMatrix c(m, m);
  for (int i = 0; i + 1 < m; ++i) c.at(i + 1, i) = 1;  // t * e_i = e_{i+1}
  for (int i = 0; i < m; ++i) c.at(i, m - 1) = -f.coeff(i);
  return c;
}

QMatrix block_companion(const std::vector<Poly>& fs) {
  int total = 0;
  for (const auto& f : fs) total += f.degree();
  QMatrix m(total, total);
  int off = 0;
  for (const auto& f : fs) {
    QMatrix c = companion_matrix(f);
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) m.at(off + i, off + j) = c.at(i, j);
    off += c.rows();
  }
  return m;
}

}  // namespace nilform
