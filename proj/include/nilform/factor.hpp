#pragma once

#include <vector>

#include "nilform/poly.hpp"

namespace nilform {

struct FactorPower {
  Poly p;       // monic
  int mult;     // multiplicity
  bool proven;  // irreducibility certified
};

struct Factorization {
  std::vector<FactorPower> factors;
  // True when every listed factor is proved irreducible over Q. When false
  // exactly one factor is an unresolved remainder, flagged proven = false.
  bool certified = true;
};

// Factors out rational roots, quadratic factors (complete search with a
// root bound), and recognizes cyclotomic remainders. Degrees 2 to 5 with
// no linear or quadratic factor are certified irreducible outright.
Factorization factor_limited(const Poly& f);

// n-th cyclotomic polynomial.
Poly cyclotomic(int n);

// p*(t) = monic(t^deg p(1/t)); requires p(0) != 0.
Poly reciprocal_conjugate(const Poly& p);

enum class Ternary { yes, no, unknown };

// Decides whether the constant c is a square in Q[t]/(f), when the
// factorization of f is complete enough to tell.
Ternary scalar_square_test(const Rational& c, const Poly& f);

}  // namespace nilform
