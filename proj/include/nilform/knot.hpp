#pragma once

#include <string>
#include <vector>

#include "nilform/center.hpp"
#include "nilform/factor.hpp"
#include "nilform/poly_matrix.hpp"
#include "nilform/wirtinger.hpp"

namespace nilform {

// Quadratic form with values in the center: one symmetric Gram matrix per
// central basis element, all in the same display coordinates.
struct QuadForm {
  int dim = 0;
  std::vector<QMatrix> gram;

  bool operator==(const QuadForm& o) const { return dim == o.dim && gram == o.gram; }
};

// Readable rendering of one Gram matrix as a polynomial in x, y, z, w, ...
std::string quadform_str(const QMatrix& gram);

// The same form presented in the alternating power basis 1, -t, t^2, -t^3,
// ... of the module: entry (i, j) picks up the sign (-1)^(i+j).
QMatrix alternate_basis(const QMatrix& gram);

// Scales the form to primitive integer coefficients with a positive leading
// coefficient. The scale is reported through *scale when non-null.
QMatrix primitive_gram(const QMatrix& gram, Rational* scale = nullptr);

struct KnotResult {
  WirtingerData wd;
  std::vector<Poly> divisors;  // monic invariant factors of the module
  Poly alexander;              // primitive integer form of their product
  int module_dim = 0;
  bool degenerate = false;     // trivial module, form not defined
  QMatrix M;                   // action of t on the module
  CenterReport center;
  QuadForm form;
  bool parametrized = true;    // display coordinates = module value at the probe arc
  bool isometry_ok = true;     // q(t v) = q(v) on the reported Grams
  bool homogeneous_ok = true;  // value at 2h equals 4 times the value at h
  std::vector<Rational> gram_det;
  std::vector<std::string> notes;
};

// Fox derivative matrix of the Wirtinger presentation, meridian column
// dropped; its invariant factors present the module.
PolyMatrix alexander_matrix(const WirtingerData& wd);
std::vector<Poly> alexander_divisors(const WirtingerData& wd);

// Full pipeline. The optional lift matrix chooses the free linear part of
// the lifted automorphism; the resulting form must not depend on it.
KnotResult knot_invariant(const PDCode& pd);
KnotResult knot_invariant(const PDCode& pd, const QMatrix& lift_A);

// Same pipeline from an explicit presentation (used by tests).
KnotResult knot_invariant_from_wirtinger(const WirtingerData& wd);
KnotResult knot_invariant_from_wirtinger(const WirtingerData& wd, const QMatrix& lift_A);

// Witness for q1(v) = c * q2(U v) with U = u(M) a polynomial substitution
// and an optional permutation of the center coordinates of q2.
struct FormWitness {
  bool found = false;
  std::vector<Rational> u;
  QMatrix U;
  Rational c = 0;
  std::vector<int> perm;
};

FormWitness find_form_witness(const QuadForm& q1, const QuadForm& q2, const QMatrix& M,
                              bool allow_permutation, int max_height = 6,
                              bool require_square_c = false);

// Folds a square scalar c = r^2 into the substitution, making c = 1.
// Returns false when c is not a rational square.
bool fold_witness_scalar(FormWitness& w);

}  // namespace nilform
