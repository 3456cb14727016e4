#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilform/nil2.hpp"
#include "nilform/poly.hpp"
#include "nilform/qmatrix.hpp"
#include "nilform/tau.hpp"
#include "test_util.hpp"

using namespace nilform;

namespace {

Poly P(const std::string& s) { return poly_parse(s); }

Nil2 rand_elem(TestRng& rng, int m) {
  return nil2_make(rng.next_vec(m), rng.next_vec(comm_dim(m)));
}

}  // namespace

TEST_CASE("pair indexing is lexicographic") {
  CHECK(pair_index(4, 0, 1) == 0);
  CHECK(pair_index(4, 0, 2) == 1);
  CHECK(pair_index(4, 0, 3) == 2);
  CHECK(pair_index(4, 1, 2) == 3);
  CHECK(pair_index(4, 1, 3) == 4);
  CHECK(pair_index(4, 2, 3) == 5);
  CHECK(comm_dim(6) == 15);
  CHECK_THROWS(pair_index(4, 2, 2));
}

TEST_CASE("wedge pairs generators only upward") {
  int m = 3;
  QVec e1 = qvec_zero(m), e2 = qvec_zero(m);
  e1[0] = 1;
  e2[1] = 1;
  CHECK(wedge(e1, e2)[pair_index(m, 0, 1)] == 1);
  CHECK(qvec_is_zero(wedge(e2, e1)));  // not antisymmetric: lower pairs give zero
  TestRng rng;
  QVec x = rng.next_vec(m), y = rng.next_vec(m), z = rng.next_vec(m);
  CHECK(wedge(qvec_add(x, y), z) == qvec_add(wedge(x, z), wedge(y, z)));
  CHECK(wedge(x, qvec_add(y, z)) == qvec_add(wedge(x, y), wedge(x, z)));
}

TEST_CASE("group axioms") {
  TestRng rng;
  int m = 4;
  for (int it = 0; it < 20; ++it) {
    Nil2 a = rand_elem(rng, m), b = rand_elem(rng, m), c = rand_elem(rng, m);
    CHECK(nil2_mul(nil2_mul(a, b), c) == nil2_mul(a, nil2_mul(b, c)));
    CHECK(nil2_mul(a, nil2_inv(a)) == nil2_identity(m));
    CHECK(nil2_mul(nil2_inv(a), a) == nil2_identity(m));
    CHECK(nil2_mul(a, nil2_identity(m)) == a);
  }
}

TEST_CASE("commutator lands in the second layer") {
  TestRng rng;
  int m = 4;
  for (int it = 0; it < 10; ++it) {
    Nil2 a = rand_elem(rng, m), b = rand_elem(rng, m);
    Nil2 c = nil2_commutator(a, b);
    CHECK(qvec_is_zero(c.ab));
    CHECK(c.comm == qvec_sub(wedge(a.ab, b.ab), wedge(b.ab, a.ab)));
    // Second-layer elements are central in the group itself.
    CHECK(nil2_mul(c, a) == nil2_mul(a, c));
  }
}

TEST_CASE("powers") {
  TestRng rng;
  Nil2 a = rand_elem(rng, 3);
  Nil2 acc = nil2_identity(3);
  for (int k = 0; k <= 6; ++k) {
    CHECK(nil2_pow(a, k) == acc);
    acc = nil2_mul(acc, a);
  }
  CHECK(nil2_pow(a, -3) == nil2_inv(nil2_pow(a, 3)));
}

TEST_CASE("induced commutator action matches the quartic table") {
  // Companion module of a generic reciprocal quartic 1 + a1 t + a2 t^2 + a1 t^3 + t^4.
  Rational a1(-3), a2(7);
  std::vector<Rational> cf = {1, a1, a2, a1, 1};
  QMatrix T = companion_matrix(Poly(cf));
  QMatrix E = lambda2_matrix(T);
  int m = 4;
  auto idx = [&](int i, int j) { return pair_index(m, i - 1, j - 1); };
  auto col_is = [&](int i, int j, const QVec& expect) {
    CHECK(E.col(idx(i, j)) == expect);
  };
  QVec v;
  v = qvec_zero(6);
  v[idx(2, 3)] = 1;
  col_is(1, 2, v);
  v = qvec_zero(6);
  v[idx(2, 4)] = 1;
  col_is(1, 3, v);
  v = qvec_zero(6);
  v[idx(1, 2)] = 1;
  v[idx(2, 3)] = -a2;
  v[idx(2, 4)] = -a1;
  col_is(1, 4, v);
  v = qvec_zero(6);
  v[idx(3, 4)] = 1;
  col_is(2, 3, v);
  v = qvec_zero(6);
  v[idx(1, 3)] = 1;
  v[idx(2, 3)] = a1;
  v[idx(3, 4)] = -a1;
  col_is(2, 4, v);
  v = qvec_zero(6);
  v[idx(1, 4)] = 1;
  v[idx(2, 4)] = a1;
  v[idx(3, 4)] = a2;
  col_is(3, 4, v);
}

TEST_CASE("induced action is functorial") {
  TestRng rng;
  for (int it = 0; it < 5; ++it) {
    QMatrix s = rng.next_mat(4, 4), t = rng.next_mat(4, 4);
    CHECK(lambda2_matrix(s * t) == lambda2_matrix(s) * lambda2_matrix(t));
  }
}

TEST_CASE("quadratic correction for the reciprocal quadratic module") {
  // For 1 + a1 t + t^2 the lift with zero linear parameter has
  // lambda(x) = a1 x2^2 / 2 - x1 x2.
  for (long a1l : {-1L, 2L, 5L}) {
    Rational a1(a1l);
    QMatrix T = companion_matrix(Poly(std::vector<Rational>{1, a1, 1}));
    TauLift lift = build_tau_lift(T);
    TestRng rng;
    for (int it = 0; it < 8; ++it) {
      QVec x = rng.next_vec(2);
      QVec l = tau_lambda(lift, x);
      REQUIRE(l.size() == 1);
      CHECK(l[0] == a1 * x[1] * x[1] / 2 - x[0] * x[1]);
    }
  }
}

TEST_CASE("lift is a homomorphism") {
  TestRng rng;
  for (int it = 0; it < 6; ++it) {
    QMatrix T = rng.next_invertible(3);
    QMatrix A = rng.next_mat(comm_dim(3), 3);
    TauLift lift = build_tau_lift(T, A);
    Nil2 a = rand_elem(rng, 3), b = rand_elem(rng, 3);
    CHECK(tau_apply(lift, nil2_mul(a, b)) == nil2_mul(tau_apply(lift, a), tau_apply(lift, b)));
    // Round trip through the inverse automorphism.
    CHECK(tau_apply(lift, tau_apply(lift, a, 1), -1) == a);
    CHECK(tau_apply(lift, tau_apply(lift, a, -2), 2) == a);
  }
}

TEST_CASE("lift respects commutators through the induced action") {
  TestRng rng;
  QMatrix T = rng.next_invertible(4);
  TauLift lift = build_tau_lift(T);
  Nil2 a = rand_elem(rng, 4), b = rand_elem(rng, 4);
  Nil2 lhs = tau_apply(lift, nil2_commutator(a, b));
  Nil2 rhs = nil2_commutator(tau_apply(lift, a), tau_apply(lift, b));
  CHECK(lhs == rhs);
  CHECK(lhs.comm == lift.E.apply(nil2_commutator(a, b).comm));
}

TEST_CASE("semidirect product") {
  TestRng rng;
  QMatrix T = companion_matrix(P("1 - t + t^2"));
  QMatrix A(1, 2);
  A.at(0, 0) = Rational(1, 2);
  A.at(0, 1) = -2;
  TauLift lift = build_tau_lift(T, A);
  for (int it = 0; it < 10; ++it) {
    Semidirect a{rand_elem(rng, 2), rng.next_int(-3, 3)};
    Semidirect b{rand_elem(rng, 2), rng.next_int(-3, 3)};
    Semidirect c{rand_elem(rng, 2), rng.next_int(-3, 3)};
    CHECK(sd_mul(lift, sd_mul(lift, a, b), c) == sd_mul(lift, a, sd_mul(lift, b, c)));
    CHECK(sd_mul(lift, a, sd_inv(lift, a)) == sd_identity(2));
    CHECK(sd_mul(lift, sd_inv(lift, a), a) == sd_identity(2));
  }
  Semidirect g{rand_elem(rng, 2), 1};
  CHECK(sd_pow(lift, g, 3) == sd_mul(lift, g, sd_mul(lift, g, g)));
  CHECK(sd_pow(lift, g, -2) == sd_inv(lift, sd_mul(lift, g, g)));
}

TEST_CASE("word evaluation") {
  QMatrix T = companion_matrix(P("1 - t + t^2"));
  TauLift lift = build_tau_lift(T);
  TestRng rng;
  std::vector<Semidirect> assign = {{rand_elem(rng, 2), 1}, {rand_elem(rng, 2), 0}};
  Word w = {{0, 1}, {1, -1}, {0, -2}, {1, 3}};
  Semidirect direct = sd_mul(
      lift, sd_mul(lift, sd_mul(lift, assign[0], sd_inv(lift, assign[1])),
                   sd_inv(lift, sd_mul(lift, assign[0], assign[0]))),
      sd_mul(lift, assign[1], sd_mul(lift, assign[1], assign[1])));
  CHECK(evaluate_word(lift, w, assign) == direct);
}
