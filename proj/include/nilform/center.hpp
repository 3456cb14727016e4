#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilform/poly.hpp"
#include "nilform/qmatrix.hpp"

namespace nilform {

struct CenterReport {
  int rank = 0;
  std::vector<QVec> basis;          // commutator coordinates of the central basis
  std::string basis_kind;           // "canonical" or "echelon"
  std::optional<int> formula_rank;  // factorization-based count, when available
  std::vector<std::string> notes;
};

// Kernel of I - lambda2_matrix(T): commutator coordinates of the central
// elements of the semidirect product.
std::vector<QVec> center_basis(const QMatrix& E);

// Rank prediction from the invariant factors, by pairing each irreducible
// factor with its reciprocal conjugate across the divisor chain. Returns
// nothing when the factorization cannot be certified. Throws
// std::domain_error when some divisor vanishes at 1 or -1.
std::optional<int> center_rank_formula(const std::vector<Poly>& divisors);

// Closed-form central elements for the companion module of a monic
// reciprocal polynomial of degree 2, 4 or 6, one per genus index.
std::vector<QVec> canonical_central_elements(const Poly& f);

// Literal transcription of the documented recurrence for the same elements,
// kept for cross-validation; known to disagree with the closed forms.
std::vector<QVec> canonical_recursion_elements(const Poly& f);

// Full center analysis for the cyclic module Q[t]/(f).
CenterReport center_report_for_poly(const Poly& f);

// Center analysis for a direct sum of cyclic modules given by a divisor
// chain (each monic with nonzero constant term). Canonical basis elements
// are only available in the cyclic case.
CenterReport center_report_for_divisors(const std::vector<Poly>& divisors);

// Coefficients of a central value in the report basis; throws
// std::domain_error if v is not in the span.
QVec project_to_center(const std::vector<QVec>& basis, const QVec& v);

}  // namespace nilform
