#pragma once

#include <vector>

#include "nilform/poly.hpp"
#include "nilform/qmatrix.hpp"

namespace nilform {

// Word in a free group: letters are nonzero ints, +k is the k-th generator
// (1-based), -k its inverse.
using FreeWord = std::vector<int>;

FreeWord fw_reduce(const FreeWord& w);
FreeWord fw_mul(const FreeWord& a, const FreeWord& b);
FreeWord fw_inv(const FreeWord& a);
bool fw_equal(const FreeWord& a, const FreeWord& b);
FreeWord fw_pow(const FreeWord& a, int k);
// a b a^-1
FreeWord fw_conj(const FreeWord& a, const FreeWord& b);
// a b a^-1 b^-1
FreeWord fw_comm(const FreeWord& a, const FreeWord& b);

// Endomorphism of a free group, by generator images.
struct FreeHom {
  std::vector<FreeWord> img;  // img[k-1] = image of generator k

  int gens() const { return static_cast<int>(img.size()); }
  FreeWord apply(const FreeWord& w) const;
};

FreeHom hom_identity(int n);
// (f after g)(x) = f(g(x)).
FreeHom hom_compose(const FreeHom& f, const FreeHom& g);
// Exponent-sum matrix: column k is the abelianized image of generator k.
QMatrix hom_abelianization(const FreeHom& f);

// Fox derivative row of a word, one polynomial per generator, evaluated
// under generator k -> t^texp[k-1]. Laurent exponents are cleared by a
// common factor t^shift (shift >= 0), which is reported.
struct FoxRow {
  std::vector<Poly> d;
  int shift;
};

FoxRow fox_row(const FreeWord& w, const std::vector<int>& texp);

}  // namespace nilform
