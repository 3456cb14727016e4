#pragma once

#include "nilform/qmatrix.hpp"

namespace nilform {

// Element of the rational free class-2 nilpotent group on m generators:
// an abelian part in Q^m and a commutator part in Q^(m choose 2), indexed
// by pairs (i,j) with i < j in lexicographic order.
struct Nil2 {
  QVec ab;
  QVec comm;

  bool operator==(const Nil2& o) const { return ab == o.ab && comm == o.comm; }
  bool operator!=(const Nil2& o) const { return !(*this == o); }
};

int comm_dim(int m);

// 0-based index of the pair (i,j), i < j, into the commutator coordinates.
int pair_index(int m, int i, int j);

// Bilinear pairing with e_i ^ e_j = e_(i,j) for i < j and 0 otherwise:
// the (i,j) coordinate of wedge(x, y) is x_i * y_j.
QVec wedge(const QVec& x, const QVec& y);

Nil2 nil2_identity(int m);
Nil2 nil2_generator(int m, int i);
Nil2 nil2_make(QVec ab, QVec comm);
bool nil2_is_identity(const Nil2& g);

// Group law: (a, p)(b, q) = (a + b, wedge(a, b) + p + q).
Nil2 nil2_mul(const Nil2& g, const Nil2& h);
Nil2 nil2_inv(const Nil2& g);
Nil2 nil2_pow(const Nil2& g, long k);

// [g, h] = g h g^-1 h^-1; lands in the commutator coordinates.
Nil2 nil2_commutator(const Nil2& g, const Nil2& h);

}  // namespace nilform
