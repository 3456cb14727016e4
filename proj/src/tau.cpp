#include "nilform/tau.hpp"

#include <stdexcept>

namespace nilform {

QMatrix lambda2_matrix(const QMatrix& T) {
  if (T.rows() != T.cols()) throw std::invalid_argument("square matrix required");
  int m = T.rows();
  int K = comm_dim(m);
  QMatrix E(K, K);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      QVec ti = T.col(i), tj = T.col(j);
      QVec col = qvec_sub(wedge(ti, tj), wedge(tj, ti));
      int c = pair_index(m, i, j);
      for (int r = 0; r < K; ++r) E.at(r, c) = col[r];
    }
  return E;
}

namespace {

// B(x, y) = wedge(Tx, Ty) - E wedge(x, y), stored one symmetric matrix per
// commutator coordinate.
std::vector<QMatrix> bilinear_part(const QMatrix& T, const QMatrix& E) {
  int m = T.rows();
  int K = comm_dim(m);
  std::vector<QVec> cols(m);
  for (int i = 0; i < m; ++i) cols[i] = T.col(i);
  std::vector<QMatrix> B(K, QMatrix(m, m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      QVec v = wedge(cols[i], cols[j]);
      QVec w = qvec_zero(K);
      if (i < j) w = E.col(pair_index(m, i, j));
      QVec b = qvec_sub(v, w);
      for (int c = 0; c < K; ++c) B[c].at(i, j) = b[c];
    }
  for (int c = 0; c < K; ++c)
    if (B[c] != B[c].transpose()) throw std::logic_error("bilinear part is not symmetric");
  return B;
}

QVec eval_bilinear(const std::vector<QMatrix>& B, const QVec& x, const QVec& y) {
  int K = static_cast<int>(B.size());
  QVec r = qvec_zero(K);
  for (int c = 0; c < K; ++c) {
    Rational acc = 0;
    int m = B[c].rows();
    for (int i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < m; ++j) acc += x[i] * B[c].at(i, j) * y[j];
    }
    r[c] = acc;
  }
  return r;
}

QVec lambda_eval(const std::vector<QMatrix>& B, const QMatrix& A, const QVec& x) {
  QVec r = qvec_scale(eval_bilinear(B, x, x), Rational(1, 2));
  return qvec_add(r, A.apply(x));
}

Nil2 apply_one(const QMatrix& T, const QMatrix& E, const std::vector<QMatrix>& B, const QMatrix& A,
               const Nil2& g) {
  return {T.apply(g.ab), qvec_add(lambda_eval(B, A, g.ab), E.apply(g.comm))};
}

}  // namespace

TauLift build_tau_lift(const QMatrix& T) {
  int K = comm_dim(T.rows());
  return build_tau_lift(T, QMatrix(K, T.rows()));
}

TauLift build_tau_lift(const QMatrix& T, const QMatrix& A) {
  if (T.rows() != T.cols()) throw std::invalid_argument("square matrix required");
  TauLift lift;
  lift.m = T.rows();
  lift.K = comm_dim(lift.m);
  if (A.rows() != lift.K || A.cols() != lift.m) throw std::invalid_argument("parameter matrix shape mismatch");
  lift.T = T;
  lift.E = lambda2_matrix(T);
  lift.A = A;
  lift.B = bilinear_part(T, lift.E);

  lift.Ti = inverse(T);  // throws if T is singular
  lift.Ei = lambda2_matrix(lift.Ti);
  if (lift.Ei * lift.E != QMatrix::identity(lift.K))
    throw std::logic_error("induced commutator action is not functorial");
  lift.Bi = bilinear_part(lift.Ti, lift.Ei);
  // The abelian-linear parameter of the inverse solves E Ai = -A Ti,
  // which makes tau o tau^-1 the identity.
  QMatrix rhs = (lift.A * Rational(-1)) * lift.Ti;
  lift.Ai = QMatrix(lift.K, lift.m);
  for (int j = 0; j < lift.m; ++j) {
    QVec x = solve_unique(lift.E, rhs.col(j));
    for (int i = 0; i < lift.K; ++i) lift.Ai.at(i, j) = x[i];
  }

  // Round-trip audit on a spanning set of the quadratic behavior.
  for (int i = 0; i < lift.m; ++i)
    for (int j = i; j < lift.m; ++j) {
      Nil2 g = nil2_identity(lift.m);
      g.ab[i] += 1;
      g.ab[j] += 1;
      if (tau_apply(lift, tau_apply(lift, g, 1), -1) != g)
        throw std::logic_error("inverse lift audit failed");
    }
  return lift;
}

QVec tau_lambda(const TauLift& lift, const QVec& x, int dir) {
  return dir >= 0 ? lambda_eval(lift.B, lift.A, x) : lambda_eval(lift.Bi, lift.Ai, x);
}

Nil2 tau_apply(const TauLift& lift, const Nil2& g, long power) {
  Nil2 r = g;
  for (long k = 0; k < power; ++k) r = apply_one(lift.T, lift.E, lift.B, lift.A, r);
  for (long k = 0; k > power; --k) r = apply_one(lift.Ti, lift.Ei, lift.Bi, lift.Ai, r);
  return r;
}

Semidirect sd_identity(int m) { return {nil2_identity(m), 0}; }

Semidirect sd_mul(const TauLift& lift, const Semidirect& a, const Semidirect& b) {
  return {nil2_mul(a.g, tau_apply(lift, b.g, a.n)), a.n + b.n};
}

Semidirect sd_inv(const TauLift& lift, const Semidirect& a) {
  return {tau_apply(lift, nil2_inv(a.g), -a.n), -a.n};
}

Semidirect sd_pow(const TauLift& lift, const Semidirect& a, long k) {
  Semidirect acc = sd_identity(lift.m);
  Semidirect base = k >= 0 ? a : sd_inv(lift, a);
  long reps = k >= 0 ? k : -k;
  for (long i = 0; i < reps; ++i) acc = sd_mul(lift, acc, base);
  return acc;
}

Semidirect evaluate_word(const TauLift& lift, const Word& w, const std::vector<Semidirect>& assign) {
  Semidirect acc = sd_identity(lift.m);
  for (const auto& [sym, exp] : w) {
    if (sym < 0 || sym >= static_cast<int>(assign.size()))
      throw std::invalid_argument("word symbol out of range");
    acc = sd_mul(lift, acc, sd_pow(lift, assign[sym], exp));
  }
  return acc;
}

}  // namespace nilform
