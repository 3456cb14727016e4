#include "nilform/nil2.hpp"

#include <stdexcept>

namespace nilform {

int comm_dim(int m) { return m * (m - 1) / 2; }

int pair_index(int m, int i, int j) {
  if (i < 0 || j <= i || j >= m) throw std::invalid_argument("bad commutator pair");
  return i * (m - 1) - i * (i - 1) / 2 + (j - i - 1);
}

QVec wedge(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
  int m = static_cast<int>(x.size());
  QVec r = qvec_zero(comm_dim(m));
  for (int i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (int j = i + 1; j < m; ++j) r[pair_index(m, i, j)] += x[i] * y[j];
  }
  return r;
}

Nil2 nil2_identity(int m) { return {qvec_zero(m), qvec_zero(comm_dim(m))}; }

Nil2 nil2_generator(int m, int i) {
  Nil2 g = nil2_identity(m);
  g.ab[i] = 1;
  return g;
}

Nil2 nil2_make(QVec ab, QVec comm) {
  int m = static_cast<int>(ab.size());
  if (static_cast<int>(comm.size()) != comm_dim(m))
    throw std::invalid_argument("commutator coordinate count mismatch");
  return {std::move(ab), std::move(comm)};
}

bool nil2_is_identity(const Nil2& g) { return qvec_is_zero(g.ab) && qvec_is_zero(g.comm); }

Nil2 nil2_mul(const Nil2& g, const Nil2& h) {
  return {qvec_add(g.ab, h.ab), qvec_add(wedge(g.ab, h.ab), qvec_add(g.comm, h.comm))};
}

Nil2 nil2_inv(const Nil2& g) {
  QVec nab = qvec_scale(g.ab, -1);
  return {nab, qvec_sub(wedge(g.ab, g.ab), g.comm)};
}

Nil2 nil2_pow(const Nil2& g, long k) {
  if (k == 0) return nil2_identity(static_cast<int>(g.ab.size()));
  if (k < 0) return nil2_inv(nil2_pow(g, -k));
  // g^k = (k*a, C(k,2)*wedge(a,a) + k*p), by induction on the group law.
  Rational kk(k);
  Rational choose2(k * (k - 1) / 2);
  return {qvec_scale(g.ab, kk), qvec_add(qvec_scale(wedge(g.ab, g.ab), choose2), qvec_scale(g.comm, kk))};
}

Nil2 nil2_commutator(const Nil2& g, const Nil2& h) {
  return nil2_mul(nil2_mul(g, h), nil2_mul(nil2_inv(g), nil2_inv(h)));
}

}  // namespace nilform
