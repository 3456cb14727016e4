#pragma once

#include <vector>

#include "nilform/nil2.hpp"
#include "nilform/qmatrix.hpp"

namespace nilform {

// The induced action of a matrix T on the commutator coordinates:
// column (i,j) is wedge(T e_i, T e_j) - wedge(T e_j, T e_i).
QMatrix lambda2_matrix(const QMatrix& T);

// Lift of an invertible T in GL_m(Q) to an automorphism of the class-2
// group: tau(x, p) = (T x, lambda(x) + E p) with E = lambda2_matrix(T) and
// lambda(x) = B(x, x)/2 + A x, where the symmetric bilinear map
// B(x, y) = wedge(Tx, Ty) - E wedge(x, y) is forced by the homomorphism
// law and A is a free parameter (default 0).
struct TauLift {
  int m = 0;
  int K = 0;                // commutator dimension
  QMatrix T, E, A;          // A is K x m
  std::vector<QMatrix> B;   // per commutator coordinate, symmetric m x m
  QMatrix Ti, Ei, Ai;       // the inverse automorphism's data
  std::vector<QMatrix> Bi;
};

TauLift build_tau_lift(const QMatrix& T);
TauLift build_tau_lift(const QMatrix& T, const QMatrix& A);

// lambda(x) of the forward (dir > 0) or inverse (dir < 0) lift.
QVec tau_lambda(const TauLift& lift, const QVec& x, int dir = 1);

// Applies tau^power to a group element.
Nil2 tau_apply(const TauLift& lift, const Nil2& g, long power = 1);

// Element (g, n) of the semidirect product with Z acting through tau.
struct Semidirect {
  Nil2 g;
  long n = 0;

  bool operator==(const Semidirect& o) const { return g == o.g && n == o.n; }
};

Semidirect sd_identity(int m);
// (g, n)(h, k) = (g * tau^n(h), n + k).
Semidirect sd_mul(const TauLift& lift, const Semidirect& a, const Semidirect& b);
Semidirect sd_inv(const TauLift& lift, const Semidirect& a);
Semidirect sd_pow(const TauLift& lift, const Semidirect& a, long k);

// Word in abstract symbols with exponents, evaluated against an assignment
// of a semidirect-product element per symbol.
using Word = std::vector<std::pair<int, int>>;

Semidirect evaluate_word(const TauLift& lift, const Word& w, const std::vector<Semidirect>& assign);

}  // namespace nilform
