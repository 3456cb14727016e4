#pragma once

#include <string>
#include <vector>

#include "nilform/center.hpp"
#include "nilform/freegroup.hpp"
#include "nilform/knot.hpp"
#include "nilform/poly.hpp"
#include "nilform/qmatrix.hpp"

namespace nilform {

// Automorphism of the surface group pi_1 of a genus g surface with one
// boundary component, a free group on 2g generators x_1..x_2g. Mapping
// classes are exactly the automorphisms fixing the boundary word.
struct SurfaceAut {
  int genus = 0;
  FreeHom fwd;
  FreeHom inv;
};

// Boundary word [x1,x2][x3,x4]...[x_{2g-1},x_{2g}]. Throws on genus < 1.
FreeWord boundary_word(int genus);

// Number of twist curves implemented at this genus: the standard chain of
// 2g + 1 curves, plus a sixth curve at genus 2.
int curve_count(int genus);

// Positive Dehn twist along the numbered curve, as an automorphism given
// by generator images. Validated at construction: fixes the boundary word
// letter for letter, acts on homology as a transvection with determinant
// one, preserves the intersection form, and composes with its inverse to
// the identity.
SurfaceAut twist_automorphism(int genus, int curve);

SurfaceAut aut_identity(int genus);
SurfaceAut aut_compose(const SurfaceAut& f, const SurfaceAut& g);
SurfaceAut aut_inverse(const SurfaceAut& f);
bool aut_equal(const SurfaceAut& f, const SurfaceAut& g);

// Composite of twist tokens: +k is a positive twist along curve k, -k its
// inverse. Tokens are listed left to right in composition order, so the
// rightmost token acts first.
SurfaceAut compose_twists(int genus, const std::vector<int>& tokens);

// True when f fixes the boundary word exactly.
bool fixes_boundary(const SurfaceAut& f);

// Action on first homology: column k is the abelianized image of x_k.
QMatrix homology_action(const SurfaceAut& f);

// Standard skew intersection form on homology, block diag(J2, ..., J2).
QMatrix intersection_form(int genus);

// Basis of the commutant {phi : phi M = M phi} of the homology action,
// the module of equivariant endomorphisms. Throws std::domain_error when
// det(tI - M) vanishes at 1 or -1.
std::vector<QMatrix> commutant_basis(const QMatrix& M);
std::vector<QMatrix> hf_basis(const SurfaceAut& f);

// Value of the boundary quadratic map at an equivariant endomorphism phi,
// in degree two commutator coordinates: the sum over handles of
// wedge(phi x_{2i-1}, phi x_{2i}) - wedge(phi x_{2i}, phi x_{2i-1}).
QVec qf_value(int genus, const QMatrix& phi);

struct McgResult {
  int genus = 0;
  QMatrix M;                    // homology action
  Poly char_poly;               // det(tI - M)
  std::vector<Poly> divisors;   // invariant factors of tI - M, nonunit
  bool zeta_fixed = false;      // boundary word fixed exactly
  int hf_dimension = 0;         // commutant dimension
  bool cyclic = false;          // module cyclic over Q[t]
  CenterReport center;
  QuadForm form;                // Gram per center coordinate
  QMatrix sum_gram;             // sum of the coordinate Grams
  bool isometry_ok = true;      // Grams invariant under the t-action
  std::vector<Rational> gram_det;
  std::vector<std::string> notes;
};

// Full pipeline for a mapping class: homology module, commutant, boundary
// quadratic form projected to the center coordinates, Gram matrices in the
// power parametrization u = x + ty + ... when the module is cyclic. The
// optional cyclic vector overrides the deterministic choice and must
// generate the module.
McgResult mcg_invariant(const SurfaceAut& f);
McgResult mcg_invariant(const SurfaceAut& f, const QVec& cyclic_vector);

// Mapping torus group: generators x_1..x_2g and gamma = 2g + 1, one
// relator gamma x_i gamma^-1 f(x_i)^-1 per generator.
struct MappingTorusPresentation {
  int genus = 0;
  std::vector<FreeWord> relators;
};

MappingTorusPresentation mapping_torus_presentation(const SurfaceAut& f);

// Alexander polynomial of the mapping torus from the presentation by Fox
// calculus, sending gamma to t and each x_i to 1: the gcd of the maximal
// minors of the relator derivative matrix, normalized monic.
Poly mapping_torus_alexander(const MappingTorusPresentation& p);

}  // namespace nilform
