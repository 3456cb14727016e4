#include "nilform/knot.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nilform/freegroup.hpp"
#include "nilform/tau.hpp"

namespace nilform {

namespace {

// Particular solution of Mx = rhs with free variables set to zero.
QVec solve_particular(const QMatrix& m, const QVec& rhs) {
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[static_cast<size_t>(i)];
  }
  std::vector<int> pivots = rref(aug);
  QVec x(static_cast<size_t>(m.cols()), Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) throw std::domain_error("no solution");
    x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols());
  }
  return x;
}

Word to_word(const FreeWord& w) {
  Word out;
  for (int letter : w) out.push_back({(letter > 0 ? letter : -letter) - 1, letter > 0 ? 1 : -1});
  return out;
}

std::string var_name(int i) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (i < 4) return names[i];
  return "v" + std::to_string(i + 1);
}

std::string monomial_str(const Rational& coef, const std::string& mono, bool first) {
  std::string c = rat_str(coef < 0 ? Rational(-coef) : coef);
  std::string body = (c == "1") ? mono : c + "*" + mono;
  if (first) return (coef < 0 ? "-" : "") + body;
  return (coef < 0 ? " - " : " + ") + body;
}

// Evaluates the Wirtinger relators and longitude in the semidirect product
// N x Z, with every arc sent to an element (a_u, b_u, 1). The assignment
// a solves the module equations; the commutator corrections b are the
// unknowns of a linear system whose matrix depends only on the words.
struct LiftProblem {
  const TauLift& lift;
  int arcs;  // total arc count A; unknown blocks for arcs 2..A
  int D, K;
  std::vector<Word> relators;
  Word longitude;

  std::vector<Semidirect> make_assign(const std::vector<QVec>& a, const QVec& b) const {
    std::vector<Semidirect> assign;
    for (int u = 1; u <= arcs; ++u) {
      QVec bu(static_cast<size_t>(K), Rational(0));
      if (u >= 2 && !b.empty())
        for (int k = 0; k < K; ++k) bu[k] = b[static_cast<size_t>((u - 2) * K + k)];
      assign.push_back({nil2_make(a[static_cast<size_t>(u - 1)], bu), 1});
    }
    return assign;
  }

  // Stacked commutator parts of all relator values.
  QVec residual(const std::vector<Semidirect>& assign, bool check_module) const {
    QVec r;
    for (const auto& w : relators) {
      Semidirect v = evaluate_word(lift, w, assign);
      if (v.n != 0) throw std::logic_error("relator has nonzero winding");
      if (check_module && !qvec_is_zero(v.g.ab))
        throw std::logic_error("assignment does not satisfy the module equations");
      r.insert(r.end(), v.g.comm.begin(), v.g.comm.end());
    }
    return r;
  }

  QMatrix linear_part() const {
    int unknowns = (arcs - 1) * K;
    std::vector<QVec> a0(static_cast<size_t>(arcs), qvec_zero(D));
    QMatrix L(static_cast<int>(relators.size()) * K, unknowns);
    for (int col = 0; col < unknowns; ++col) {
      QVec b(static_cast<size_t>(unknowns), Rational(0));
      b[static_cast<size_t>(col)] = 1;
      QVec r = residual(make_assign(a0, b), false);
      for (int i = 0; i < L.rows(); ++i) L.at(i, col) = r[static_cast<size_t>(i)];
    }
    return L;
  }
};

int vec_gcd(const std::vector<int>& v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

bool next_tuple(std::vector<int>& v, int h) {
  for (size_t i = v.size(); i-- > 0;) {
    if (v[i] < h) {
      ++v[i];
      for (size_t j = i + 1; j < v.size(); ++j) v[j] = -h;
      return true;
    }
    // carry
  }
  return false;
}

bool verify_witness(const QuadForm& q1, const QuadForm& q2, const QMatrix& U,
                    const std::vector<int>& perm, Rational& c_out) {
  QMatrix Ut = U.transpose();
  std::vector<QMatrix> g2p;
  for (size_t l = 0; l < q1.gram.size(); ++l) g2p.push_back(Ut * q2.gram[static_cast<size_t>(perm[l])] * U);
  bool have_c = false;
  Rational c = 1;
  for (size_t l = 0; l < q1.gram.size(); ++l)
    for (int i = 0; i < q1.dim && !have_c; ++i)
      for (int j = 0; j < q1.dim && !have_c; ++j)
        if (g2p[l].at(i, j) != 0) {
          c = q1.gram[l].at(i, j) / g2p[l].at(i, j);
          have_c = true;
        }
  if (have_c && c == 0) return false;
  for (size_t l = 0; l < q1.gram.size(); ++l)
    if (q1.gram[l] != g2p[l] * c) return false;
  c_out = c;
  return true;
}

}  // namespace

QMatrix alternate_basis(const QMatrix& gram) {
  QMatrix g = gram;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if ((i + j) % 2 == 1) g.at(i, j) = -g.at(i, j);
  return g;
}

QMatrix primitive_gram(const QMatrix& gram, Rational* scale) {
  // Form coefficients: g_ii on the diagonal, 2 g_ij off the diagonal.
  mpz_class den_lcm = 1;
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = i; j < gram.cols(); ++j) {
      Rational c = (i == j) ? gram.at(i, j) : gram.at(i, j) * 2;
      if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  mpz_class num_gcd = 0;
  Rational lead = 0;
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = i; j < gram.cols(); ++j) {
      Rational c = (i == j) ? gram.at(i, j) : gram.at(i, j) * 2;
      if (c == 0) continue;
      if (lead == 0) lead = c;
      mpz_class n = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
  if (num_gcd == 0) {
    if (scale) *scale = 1;
    return gram;
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  if (lead < 0) s = -s;
  if (scale) *scale = s;
  QMatrix g = gram;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) g.at(i, j) = g.at(i, j) * s;
  return g;
}

std::string quadform_str(const QMatrix& gram) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = i; j < gram.cols(); ++j) {
      Rational coef = (i == j) ? gram.at(i, j) : gram.at(i, j) * 2;
      if (coef == 0) continue;
      std::string mono = (i == j) ? var_name(i) + "^2" : var_name(i) + "*" + var_name(j);
      os << monomial_str(coef, mono, first);
      first = false;
    }
  if (first) os << "0";
  return os.str();
}

PolyMatrix alexander_matrix(const WirtingerData& wd) {
  std::vector<int> texp(static_cast<size_t>(wd.arcs), 1);
  std::vector<FreeWord> rels = wd.relators();
  PolyMatrix m(static_cast<int>(rels.size()), wd.arcs);
  for (size_t r = 0; r < rels.size(); ++r) {
    FoxRow row = fox_row(rels[r], texp);
    for (int j = 0; j < wd.arcs; ++j) m.at(static_cast<int>(r), j) = row.d[static_cast<size_t>(j)];
  }
  return m.drop_col(wd.meridian - 1);
}

std::vector<Poly> alexander_divisors(const WirtingerData& wd) {
  std::vector<Poly> raw = smith_divisors(alexander_matrix(wd));
  std::vector<Poly> out;
  for (const auto& d : raw) {
    int v = t_valuation(d);
    Poly g = v > 0 ? poly_exact_div(d, Poly::monomial(v, 1)) : d;
    if (g.degree() >= 1) out.push_back(monic_normalize(g));
  }
  return out;
}

static KnotResult knot_invariant_impl(const WirtingerData& wd, const QMatrix* lift_A) {
  KnotResult res;
  res.wd = wd;
  res.divisors = alexander_divisors(res.wd);

  Poly prod = Poly::monomial(0, 1);
  for (const auto& d : res.divisors) prod = prod * d;
  res.alexander = primitive_normalize(prod);
  Rational at1 = res.alexander.eval(1);
  if (at1 != 1 && at1 != -1)
    throw std::domain_error("presentation fails the knot determinant condition; the code is not a classical knot diagram");

  for (const auto& d : res.divisors) res.module_dim += d.degree();
  if (res.module_dim == 0) {
    res.degenerate = true;
    res.notes.push_back("trivial module; the form is identically zero and carries no information");
    return res;
  }

  res.M = block_companion(res.divisors);
  res.center = center_report_for_divisors(res.divisors);
  int D = res.module_dim, K = comm_dim(D), R = res.center.rank;

  // Module solution space: one value in Q^D per arc, meridian pinned to 0,
  // a_out = M^s a_in + (I - M^s) a_over at each crossing.
  QMatrix Mi = inverse(res.M);
  int A = res.wd.arcs;
  QMatrix S(static_cast<int>(res.wd.cross.size()) * D, (A - 1) * D);
  auto add_block = [&](int row0, int arc, const QMatrix& blk, int sgn) {
    if (arc == 1) return;  // meridian contributes nothing
    int col0 = (arc - 2) * D;
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        S.at(row0 + i, col0 + j) = S.at(row0 + i, col0 + j) + blk.at(i, j) * sgn;
  };
  QMatrix Id = QMatrix::identity(D);
  for (size_t cidx = 0; cidx < res.wd.cross.size(); ++cidx) {
    const auto& c = res.wd.cross[cidx];
    const QMatrix& Ms = c.sign > 0 ? res.M : Mi;
    int row0 = static_cast<int>(cidx) * D;
    add_block(row0, c.under_out, Id, 1);
    add_block(row0, c.under_in, Ms, -1);
    add_block(row0, c.over, Id - Ms, -1);
  }
  std::vector<QVec> hbasis = kernel_basis(S);
  int H = static_cast<int>(hbasis.size());
  if (H != D) {
    res.notes.push_back("module solution space has dimension " + std::to_string(H) +
                        ", expected " + std::to_string(D) + "; module is not cyclic");
    res.parametrized = false;
  }

  TauLift lift = lift_A ? build_tau_lift(res.M, *lift_A) : build_tau_lift(res.M);

  LiftProblem lp{lift, A, D, K, {}, to_word(res.wd.longitude)};
  for (const auto& r : res.wd.relators()) lp.relators.push_back(to_word(r));
  QMatrix L = lp.linear_part();

  auto arc_values = [&](const QVec& h) {
    std::vector<QVec> a(static_cast<size_t>(A), qvec_zero(D));
    for (int u = 2; u <= A; ++u)
      for (int d = 0; d < D; ++d) a[static_cast<size_t>(u - 1)][d] = h[static_cast<size_t>((u - 2) * D + d)];
    return a;
  };

  // Central value of the longitude for one module solution.
  auto central_value = [&](const QVec& h) {
    std::vector<QVec> a = arc_values(h);
    QVec r0 = lp.residual(lp.make_assign(a, {}), true);
    QVec b = solve_particular(L, qvec_scale(r0, Rational(-1)));
    Semidirect v = evaluate_word(lift, lp.longitude, lp.make_assign(a, b));
    if (v.n != 0) throw std::logic_error("longitude has nonzero winding");
    if (!qvec_is_zero(v.g.ab)) throw std::logic_error("longitude value is not in the commutator subgroup");
    if (lift.E.apply(v.g.comm) != v.g.comm) throw std::logic_error("longitude value is not central");
    return project_to_center(res.center.basis, v.g.comm);
  };

  // Gram matrices by polarization over the solution basis.
  std::vector<QVec> diag;
  for (int i = 0; i < H; ++i) diag.push_back(central_value(hbasis[static_cast<size_t>(i)]));

  // Quadratic homogeneity self-check on the first basis vector.
  if (H > 0) {
    QVec doubled = hbasis[0];
    for (auto& e : doubled) e = e * 2;
    QVec v2 = central_value(doubled);
    for (int l = 0; l < R; ++l)
      if (v2[l] != diag[0][l] * 4) res.homogeneous_ok = false;
  }
  std::vector<QMatrix> gram(static_cast<size_t>(R), QMatrix(H, H));
  for (int i = 0; i < H; ++i) {
    for (int l = 0; l < R; ++l) gram[static_cast<size_t>(l)].at(i, i) = diag[static_cast<size_t>(i)][l];
    for (int j = i + 1; j < H; ++j) {
      QVec mixed = central_value(qvec_add(hbasis[static_cast<size_t>(i)], hbasis[static_cast<size_t>(j)]));
      for (int l = 0; l < R; ++l) {
        Rational half = (mixed[l] - diag[static_cast<size_t>(i)][l] - diag[static_cast<size_t>(j)][l]) / 2;
        gram[static_cast<size_t>(l)].at(i, j) = half;
        gram[static_cast<size_t>(l)].at(j, i) = half;
      }
    }
  }

  // Transport to display coordinates: the module value at the probe arc.
  // When that value fails to span the module, fall back to the first arc
  // whose value does.
  if (res.parametrized && res.wd.probe_arc >= 2) {
    std::vector<int> candidates;
    candidates.push_back(res.wd.probe_arc);
    for (int arc = 2; arc <= res.wd.arcs; ++arc)
      if (arc != res.wd.probe_arc) candidates.push_back(arc);
    bool done = false;
    for (int arc : candidates) {
      std::vector<QVec> cols;
      for (const auto& h : hbasis) {
        QVec v(static_cast<size_t>(D));
        for (int d = 0; d < D; ++d) v[d] = h[static_cast<size_t>((arc - 2) * D + d)];
        cols.push_back(v);
      }
      QMatrix P = QMatrix::from_cols(cols);
      if (rank(P) != D) continue;
      QMatrix Pi = inverse(P);
      QMatrix Pit = Pi.transpose();
      for (auto& g : gram) g = Pit * g * Pi;
      if (arc != res.wd.probe_arc) {
        res.wd.probe_arc = arc;
        res.notes.push_back("display parametrized by the module value at arc " + std::to_string(arc) +
                            "; the value at the first arc past the meridian is degenerate");
      }
      done = true;
      break;
    }
    if (!done) {
      res.parametrized = false;
      res.notes.push_back("no single arc value determines the solution; raw solution coordinates reported");
    }
  } else if (res.wd.probe_arc < 2) {
    res.parametrized = false;
  }

  res.form.dim = res.parametrized ? D : H;
  res.form.gram = gram;
  for (const auto& g : res.form.gram) res.gram_det.push_back(determinant(g));

  // Isometry self-check: multiplication by t preserves every Gram.
  if (res.parametrized) {
    QMatrix Mt = res.M.transpose();
    for (const auto& g : res.form.gram)
      if (Mt * g * res.M != g) res.isometry_ok = false;
  }
  return res;
}

KnotResult knot_invariant(const PDCode& pd) { return knot_invariant_impl(wirtinger_from_pd(pd), nullptr); }
KnotResult knot_invariant(const PDCode& pd, const QMatrix& lift_A) {
  return knot_invariant_impl(wirtinger_from_pd(pd), &lift_A);
}
KnotResult knot_invariant_from_wirtinger(const WirtingerData& wd) { return knot_invariant_impl(wd, nullptr); }
KnotResult knot_invariant_from_wirtinger(const WirtingerData& wd, const QMatrix& lift_A) {
  return knot_invariant_impl(wd, &lift_A);
}

FormWitness find_form_witness(const QuadForm& q1, const QuadForm& q2, const QMatrix& M,
                              bool allow_permutation, int max_height, bool require_square_c) {
  FormWitness w;
  if (q1.dim != q2.dim || q1.gram.size() != q2.gram.size()) return w;
  int D = q1.dim;
  int R = static_cast<int>(q1.gram.size());
  if (D == 0) return w;

  std::vector<QMatrix> mpow;
  mpow.push_back(QMatrix::identity(D));
  for (int i = 1; i < D; ++i) mpow.push_back(mpow.back() * M);

  std::vector<std::vector<int>> perms;
  std::vector<int> p0(static_cast<size_t>(R));
  std::iota(p0.begin(), p0.end(), 0);
  perms.push_back(p0);
  if (allow_permutation) {
    std::vector<int> p = p0;
    while (std::next_permutation(p.begin(), p.end())) perms.push_back(p);
  }

  for (int h = 1; h <= max_height; ++h) {
    std::vector<int> u(static_cast<size_t>(D), -h);
    do {
      int maxabs = 0;
      for (int v : u) maxabs = std::max(maxabs, v < 0 ? -v : v);
      if (maxabs != h) continue;  // lower heights already tried
      if (vec_gcd(u) != 1) continue;
      int lead = 0;
      for (int v : u)
        if (v != 0) {
          lead = v;
          break;
        }
      if (lead < 0) continue;
      QMatrix U(D, D);
      for (int i = 0; i < D; ++i)
        if (u[static_cast<size_t>(i)] != 0) U = U + mpow[static_cast<size_t>(i)] * Rational(u[static_cast<size_t>(i)]);
      for (const auto& perm : perms) {
        Rational c;
        if (verify_witness(q1, q2, U, perm, c)) {
          if (require_square_c && !(c > 0 && rat_is_square(c))) continue;
          w.found = true;
          w.U = U;
          w.c = c;
          w.perm = perm;
          for (int v : u) w.u.push_back(Rational(v));
          return w;
        }
      }
    } while (next_tuple(u, h));
  }
  return w;
}

bool fold_witness_scalar(FormWitness& w) {
  if (!w.found) return false;
  if (w.c == 1) return true;
  if (w.c <= 0 || !rat_is_square(w.c)) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), w.c.get_num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), w.c.get_den().get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  for (auto& ui : w.u) ui = ui * r;
  w.U = w.U * r;
  w.c = 1;
  return true;
}

}  // namespace nilform
