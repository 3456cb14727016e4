#include "nilform/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilform {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  a_.assign(static_cast<size_t>(rows) * cols, Poly());
}

PolyMatrix PolyMatrix::constant(const QMatrix& m) {
  PolyMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Poly(m.at(i, j));
  return r;
}

PolyMatrix PolyMatrix::characteristic(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic matrix of non-square matrix");
  PolyMatrix r = constant(m * Rational(-1));
  for (int i = 0; i < m.rows(); ++i) r.at(i, i) = r.at(i, i) + Poly::t();
  return r;
}

PolyMatrix PolyMatrix::drop_col(int j) const {
  PolyMatrix r(rows_, cols_ - 1);
  for (int i = 0; i < rows_; ++i)
    for (int c = 0, o = 0; c < cols_; ++c) {
      if (c == j) continue;
      r.at(i, o++) = at(i, c);
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Poly poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return Poly(Rational(1));
  PolyMatrix w = m;
  Poly prev(Rational(1));
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!w.at(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return Poly();
      for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = poly_exact_div(w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
      w.at(i, k) = Poly();
    }
    prev = w.at(k, k);
  }
  Poly d = w.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

namespace {

void add_row(PolyMatrix& m, int dst, int src, const Poly& factor) {
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) = m.at(dst, j) + m.at(src, j) * factor;
}

void add_col(PolyMatrix& m, int dst, int src, const Poly& factor) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, dst) = m.at(i, dst) + m.at(i, src) * factor;
}

void swap_rows(PolyMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(PolyMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

std::vector<Poly> smith_divisors(const PolyMatrix& m) {
  PolyMatrix w = m;
  int n = std::min(w.rows(), w.cols());
  int k = 0;
  for (; k < n; ++k) {
    for (;;) {
      // Minimal-degree pivot in the trailing submatrix, ties by row then column.
      int pi = -1, pj = -1, best = -1;
      for (int i = k; i < w.rows(); ++i)
        for (int j = k; j < w.cols(); ++j) {
          const Poly& e = w.at(i, j);
          if (e.is_zero()) continue;
          if (best < 0 || e.degree() < best) {
            best = e.degree();
            pi = i;
            pj = j;
          }
        }
      if (best < 0) goto collect;
      swap_rows(w, k, pi);
      swap_cols(w, k, pj);

      bool changed = false;
      for (int i = k + 1; i < w.rows(); ++i) {
        if (w.at(i, k).is_zero()) continue;
        PolyDivMod d = poly_divmod(w.at(i, k), w.at(k, k));
        add_row(w, i, k, -d.quot);
        if (!d.rem.is_zero()) changed = true;
      }
      for (int j = k + 1; j < w.cols(); ++j) {
        if (w.at(k, j).is_zero()) continue;
        PolyDivMod d = poly_divmod(w.at(k, j), w.at(k, k));
        add_col(w, j, k, -d.quot);
        if (!d.rem.is_zero()) changed = true;
      }
      if (changed) continue;

      // Pivot now isolated; force it to divide the rest of the submatrix.
      bool bad = false;
      for (int i = k + 1; i < w.rows() && !bad; ++i)
        for (int j = k + 1; j < w.cols() && !bad; ++j) {
          if (w.at(i, j).is_zero()) continue;
          if (!poly_divmod(w.at(i, j), w.at(k, k)).rem.is_zero()) {
            add_row(w, k, i, Poly(Rational(1)));
            bad = true;
          }
        }
      if (!bad) break;
    }
  }
collect:
  std::vector<Poly> out;
  for (int i = 0; i < k; ++i) {
    Poly d = w.at(i, i);
    if (d.is_zero()) throw std::logic_error("zero pivot after elimination");
    if (d.degree() == 0) continue;
    out.push_back(monic_normalize(d));
  }
  for (size_t i = 0; i + 1 < out.size(); ++i)
    if (!poly_divmod(out[i + 1], out[i]).rem.is_zero())
      throw std::logic_error("invariant factors do not form a divisibility chain");
  return out;
}

}  // namespace nilform
