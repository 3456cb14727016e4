#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilform/factor.hpp"
#include "nilform/mcg.hpp"
#include "nilform/tau.hpp"
#include "test_util.hpp"

using namespace nilform;

namespace {

Poly P(const std::string& s) { return poly_parse(s); }

const std::vector<int> kWordOne = {2, 3, -4, -5, 1};
const std::vector<int> kWordThree = {2, 3, 3, 3, -4, -5, 1};

QMatrix golden_gram() {
  Rational h(1, 2);
  return QMatrix::from_rows({{1, h, -h, -1}, {h, 1, h, -h}, {-h, h, 1, h}, {-1, -h, h, 1}});
}

QMatrix gram_sum(const McgResult& r) {
  QMatrix s(r.form.dim, r.form.dim);
  for (const auto& g : r.form.gram) s = s + g;
  return s;
}

}  // namespace

TEST_CASE("boundary word") {
  CHECK(fw_equal(boundary_word(1), FreeWord{1, 2, -1, -2}));
  CHECK(boundary_word(2).size() == 8);
  FreeWord z3 = boundary_word(3);
  CHECK(z3.size() == 12);
  CHECK(fw_equal(z3, FreeWord{1, 2, -1, -2, 3, 4, -3, -4, 5, 6, -5, -6}));
  CHECK_THROWS_AS(boundary_word(0), std::invalid_argument);
}

TEST_CASE("twist construction validates across the implemented set") {
  for (int g = 1; g <= 3; ++g) {
    FreeWord z = boundary_word(g);
    QMatrix J = intersection_form(g);
    QMatrix I = QMatrix::identity(2 * g);
    for (int c = 1; c <= curve_count(g); ++c) {
      CAPTURE(g);
      CAPTURE(c);
      SurfaceAut t = twist_automorphism(g, c);
      CHECK(fw_equal(t.fwd.apply(z), z));
      CHECK(aut_equal(aut_compose(t, aut_inverse(t)), aut_identity(g)));
      QMatrix M = homology_action(t);
      QMatrix N = M - I;
      CHECK((N * N).is_zero());
      CHECK(determinant(M) == Rational(1));
      CHECK(M.transpose() * J * M == J);
    }
  }
  CHECK(curve_count(1) == 3);
  CHECK(curve_count(2) == 6);
  CHECK(curve_count(3) == 7);
  CHECK_THROWS_AS(twist_automorphism(2, 7), std::invalid_argument);
}

TEST_CASE("chain relations: adjacent curves braid, distant curves commute") {
  for (int g = 2; g <= 3; ++g) {
    const int m = 2 * g + 1;
    std::vector<SurfaceAut> t;
    for (int c = 1; c <= m; ++c) t.push_back(twist_automorphism(g, c));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        CAPTURE(g);
        CAPTURE(i);
        CAPTURE(j);
        SurfaceAut ij = aut_compose(t[i], t[j]);
        SurfaceAut ji = aut_compose(t[j], t[i]);
        if (j == i + 1)
          CHECK(aut_equal(aut_compose(ij, t[i]), aut_compose(ji, t[j])));
        else
          CHECK(aut_equal(ij, ji));
      }
  }
}

TEST_CASE("sixth genus 2 curve: conjugate of curve 4 along curve 5") {
  std::vector<SurfaceAut> t;
  for (int c = 1; c <= 6; ++c) t.push_back(twist_automorphism(2, c));
  SurfaceAut t5i = aut_inverse(t[4]);
  CHECK(aut_equal(t[5], aut_compose(t5i, aut_compose(t[3], t[4]))));
  // It meets curves 3, 4, 5 once and misses curves 1, 2.
  for (int j : {0, 1}) {
    SurfaceAut ab = aut_compose(t[5], t[j]);
    SurfaceAut ba = aut_compose(t[j], t[5]);
    CHECK(aut_equal(ab, ba));
  }
  for (int j : {2, 3, 4}) {
    SurfaceAut ab = aut_compose(t[5], t[j]);
    SurfaceAut ba = aut_compose(t[j], t[5]);
    CHECK(aut_equal(aut_compose(ab, t[5]), aut_compose(ba, t[j])));
  }
}

TEST_CASE("composite word: homology module of the first example") {
  SurfaceAut f1 = compose_twists(2, kWordOne);
  CHECK(fixes_boundary(f1));
  Poly target = P("1 - 2*t + 3*t^2 - 2*t^3 + t^4");
  CHECK(P("1 - t + t^2") * P("1 - t + t^2") == target);
  McgResult r = mcg_invariant(f1);
  CHECK(r.char_poly == target);
  REQUIRE(r.divisors.size() == 1);
  CHECK(r.divisors[0] == target);
  CHECK(r.hf_dimension == 4);
  CHECK(r.cyclic);
  CHECK(r.zeta_fixed);
  CHECK(r.center.rank == 2);
  CHECK(r.center.basis_kind == "canonical");
}

TEST_CASE("both example words share the rational canonical form") {
  McgResult r1 = mcg_invariant(compose_twists(2, kWordOne));
  McgResult r2 = mcg_invariant(compose_twists(2, kWordThree));
  CHECK(r1.char_poly == r2.char_poly);
  CHECK(r1.divisors == r2.divisors);
}

TEST_CASE("golden display of the first example word") {
  McgResult r = mcg_invariant(compose_twists(2, kWordOne));
  REQUIRE(r.form.gram.size() == 2);
  // w^2 - 2xw + x^2 - wy + xy + y^2 + wz - xz + yz + z^2 on u = x + ty + t^2 z + t^3 w.
  CHECK(r.sum_gram == golden_gram());
  CHECK(gram_sum(r) == golden_gram());
  CHECK(quadform_str(r.sum_gram) ==
        "x^2 + x*y - x*z - 2*x*w + y^2 + y*z - y*w + z^2 + z*w + w^2");
  // Per-coordinate Grams, frozen from the same pipeline.
  QMatrix g0 = QMatrix::from_rows({{1, 1, Rational(1, 2), -1},
                                   {1, 1, 1, Rational(1, 2)},
                                   {Rational(1, 2), 1, 1, 1},
                                   {-1, Rational(1, 2), 1, 1}});
  QMatrix g1 = QMatrix::from_rows({{0, Rational(-1, 2), -1, 0},
                                   {Rational(-1, 2), 0, Rational(-1, 2), -1},
                                   {-1, Rational(-1, 2), 0, Rational(-1, 2)},
                                   {0, -1, Rational(-1, 2), 0}});
  CHECK(r.form.gram[0] == g0);
  CHECK(r.form.gram[1] == g1);
  CHECK(r.isometry_ok);
  // The displayed quadratic is also reachable through the unit witness.
  FormWitness w = find_form_witness(QuadForm{4, {r.sum_gram}}, QuadForm{4, {golden_gram()}},
                                    companion_matrix(r.char_poly), false, 6, true);
  REQUIRE(w.found);
  CHECK(fold_witness_scalar(w));
  CHECK(w.c == Rational(1));
}

TEST_CASE("second example word: three times the first, and not equivalent") {
  McgResult r1 = mcg_invariant(compose_twists(2, kWordOne));
  SurfaceAut f2 = compose_twists(2, kWordThree);
  McgResult r2 = mcg_invariant(f2);
  QMatrix C = companion_matrix(r1.char_poly);
  // Proportionality witness between the composite displays: the scalar class
  // modulo unit norms is 3.
  FormWitness w = find_form_witness(QuadForm{4, {r2.sum_gram}}, QuadForm{4, {r1.sum_gram}}, C,
                                    false, 6, false);
  REQUIRE(w.found);
  Rational c = w.c;
  CHECK((c == Rational(3) || c == Rational(1, 3)));
  // Shared parametrization realizing the factor exactly: rescale the module
  // identification of the second word by the unit 1/3.
  QVec v = qvec_zero(4);
  v[0] = Rational(1, 3);
  McgResult r2s = mcg_invariant(f2, v);
  CHECK(r2s.sum_gram == r1.sum_gram * Rational(3));
  // 3 has no square root in the integral module ring, so the forms are not
  // equivalent over it. (They are equivalent over the rational ring: the
  // substitution t^2 + t^3 has determinant 9 and realizes the factor, but
  // it is not an integral unit.)
  CHECK(scalar_square_test(Rational(3), r1.char_poly) == Ternary::no);
}

TEST_CASE("boundary form values are equivariant and central") {
  SurfaceAut f1 = compose_twists(2, kWordOne);
  QMatrix M = homology_action(f1);
  QMatrix E = lambda2_matrix(M);
  for (const QMatrix& phi : hf_basis(f1)) {
    QVec v = qf_value(2, phi);
    CHECK(E.apply(v) == v);
  }
}

TEST_CASE("conjugate mapping classes give the same coordinate Grams") {
  SurfaceAut f1 = compose_twists(2, kWordOne);
  McgResult r1 = mcg_invariant(f1);
  SurfaceAut h = compose_twists(2, {1, 2});
  SurfaceAut g = aut_compose(aut_compose(h, f1), aut_inverse(h));
  QMatrix H = homology_action(h);
  QVec e1 = qvec_zero(4);
  e1[0] = 1;
  McgResult rg = mcg_invariant(g, H.apply(e1));
  CHECK(rg.char_poly == r1.char_poly);
  CHECK(rg.form.gram == r1.form.gram);
  CHECK(rg.sum_gram == r1.sum_gram);
}

TEST_CASE("degenerate modules are refused") {
  CHECK_THROWS_WITH_AS(mcg_invariant(aut_identity(2)),
                       "degenerate module (Torelli-adjacent case); unsupported",
                       std::domain_error);
  CHECK_THROWS_AS(hf_basis(aut_identity(2)), std::domain_error);
  // A single twist acts as a transvection, so t - 1 divides everything.
  CHECK_THROWS_AS(mcg_invariant(twist_automorphism(2, 1)), std::domain_error);
}

TEST_CASE("commutant dimensions") {
  // Irreducible quartic: the commutant of its companion is the quartic
  // field, dimension 4.
  QMatrix C = companion_matrix(P("1 + t + t^4"));
  CHECK(commutant_basis(C).size() == 4);
  CHECK(commutant_basis(QMatrix::identity(4)).size() == 16);
  SurfaceAut f1 = compose_twists(2, kWordOne);
  CHECK(hf_basis(f1).size() == 4);
}

TEST_CASE("genus 1 composite: trefoil monodromy module") {
  McgResult r = mcg_invariant(compose_twists(1, {1, 2}));
  CHECK(r.char_poly == P("1 - t + t^2"));
  CHECK(r.center.rank == 1);
  REQUIRE(r.form.gram.size() == 1);
  QMatrix g = QMatrix::from_rows({{-1, Rational(-1, 2)}, {Rational(-1, 2), -1}});
  CHECK(r.form.gram[0] == g);
  CHECK(quadform_str(r.sum_gram) == "-x^2 - x*y - y^2");
  CHECK(r.isometry_ok);
}

TEST_CASE("empty twist word is the identity mapping class") {
  SurfaceAut f = compose_twists(2, {});
  CHECK(aut_equal(f, aut_identity(2)));
  CHECK_THROWS_AS(compose_twists(2, {0}), std::invalid_argument);
}

TEST_CASE("mapping torus presentation and its Alexander polynomial") {
  SurfaceAut f1 = compose_twists(2, kWordOne);
  MappingTorusPresentation p = mapping_torus_presentation(f1);
  CHECK(p.relators.size() == 4);
  CHECK(mapping_torus_alexander(p) == P("1 - 2*t + 3*t^2 - 2*t^3 + t^4"));
  SurfaceAut f2 = compose_twists(2, kWordThree);
  CHECK(mapping_torus_alexander(mapping_torus_presentation(f2)) ==
        P("1 - 2*t + 3*t^2 - 2*t^3 + t^4"));
  SurfaceAut g1 = compose_twists(1, {1, 2});
  CHECK(mapping_torus_alexander(mapping_torus_presentation(g1)) == P("1 - t + t^2"));
  // The presentation needs no nondegeneracy: a single transvection works.
  SurfaceAut t1 = twist_automorphism(2, 1);
  CHECK(mapping_torus_alexander(mapping_torus_presentation(t1)) ==
        P("1 - 4*t + 6*t^2 - 4*t^3 + t^4"));
}

TEST_CASE("mapping torus abelianization has rank one plus the corank") {
  for (int g = 1; g <= 2; ++g) {
    std::vector<std::vector<int>> words = {{1, 2}, {1}, {2, -1}};
    for (const auto& w : words) {
      CAPTURE(g);
      SurfaceAut f = compose_twists(g, w);
      QMatrix M = homology_action(f);
      const int n = 2 * g;
      // Abelianized relator matrix: columns for x_1..x_2g and gamma; the
      // gamma column vanishes, rows are M - I.
      QMatrix A(n, n + 1);
      MappingTorusPresentation p = mapping_torus_presentation(f);
      for (int i = 0; i < n; ++i) {
        QVec counts(n + 1, Rational(0));
        for (int letter : p.relators[i])
          counts[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
        for (int j = 0; j <= n; ++j) A.at(i, j) = counts[j];
      }
      for (int i = 0; i < n; ++i) CHECK(A.at(i, n) == Rational(0));
      QMatrix MI = M - QMatrix::identity(n);
      int corank = n - rank(MI);
      CHECK(n + 1 - rank(A) == 1 + corank);
    }
  }
}

TEST_CASE("random twist words: invariants hold on the implemented curves") {
  TestRng rng;
  for (int g = 2; g <= 3; ++g) {
    FreeWord z = boundary_word(g);
    QMatrix J = intersection_form(g);
    for (int trial = 0; trial < 10; ++trial) {
      int len = rng.next_int(1, 6);
      std::vector<int> toks;
      for (int i = 0; i < len; ++i) {
        int c = rng.next_int(1, curve_count(g));
        toks.push_back(rng.next_int(0, 1) ? c : -c);
      }
      CAPTURE(g);
      CAPTURE(trial);
      SurfaceAut f = compose_twists(g, toks);
      CHECK(fw_equal(f.fwd.apply(z), z));
      QMatrix M = homology_action(f);
      CHECK(M.transpose() * J * M == J);
      Poly cp = char_poly(M);
      if (cp.eval(Rational(1)) == Rational(0) || cp.eval(Rational(-1)) == Rational(0))
        continue;
      McgResult r = mcg_invariant(f);
      CHECK(r.isometry_ok);
      CHECK(r.zeta_fixed);
      if (r.center.formula_rank) CHECK(*r.center.formula_rank == r.center.rank);
      CHECK(static_cast<int>(r.gram_det.size()) == r.center.rank);
    }
  }
}
