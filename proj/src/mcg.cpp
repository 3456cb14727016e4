#include "nilform/mcg.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "nilform/nil2.hpp"
#include "nilform/poly_matrix.hpp"
#include "nilform/tau.hpp"

namespace nilform {

namespace detail {
SurfaceAut twist_raw(int genus, int curve, int ha, int hb, int hc);
}

namespace {

// Handedness of the shipped twists. The relative signs are forced by the
// braid relations between adjacent chain curves; the global mirror is the
// one reproducing the documented genus 2 examples (docs/conventions.md).
constexpr int kHandA = 1;   // twists along the handle core curves
constexpr int kHandB = -1;  // twists along the transverse curves
constexpr int kHandC = 1;   // twists along the connecting curves

FreeWord word(std::initializer_list<int> letters) {
  return fw_reduce(FreeWord(letters));
}

// x_{p+1} -> x_{p+1} x_p^h: twist along the core curve of the handle at
// generator pair (p, p+1). Right multiplication is the variant that fixes
// the boundary word exactly, not just up to conjugacy.
void core_images(FreeHom& fwd, FreeHom& inv, int p, int h) {
  fwd.img[p] = fw_reduce(fw_mul(FreeWord{p + 1}, fw_pow(FreeWord{p}, h)));
  inv.img[p] = fw_reduce(fw_mul(FreeWord{p + 1}, fw_pow(FreeWord{p}, -h)));
}

// x_p -> x_p x_{p+1}^h: twist along the transverse curve of the handle at
// pair (p, p+1).
void transverse_images(FreeHom& fwd, FreeHom& inv, int p, int h) {
  fwd.img[p - 1] = fw_reduce(fw_mul(FreeWord{p}, fw_pow(FreeWord{p + 1}, h)));
  inv.img[p - 1] = fw_reduce(fw_mul(FreeWord{p}, fw_pow(FreeWord{p + 1}, -h)));
}

// Twist along the curve connecting the handles at pairs (p, p+1) and
// (p+2, p+3). The image words come from a ribbon model of the surface
// (docs/conventions.md) and telescope to fix the boundary word letter for
// letter; construction revalidates that along with the homology checks.
void connect_images(FreeHom& fwd, FreeHom& inv, int p, int h) {
  const int a = p, b = p + 1, c = p + 2, d = p + 3;
  FreeWord fb = word({-c, b, a});
  FreeWord fc = word({-c, b, a, -b, c, b, -a, -b, c});
  FreeWord fd = word({d, b, -a, -b, c});
  FreeWord gb = word({b, -a, -b, c, b});
  FreeWord gc = word({b, -a, -b, c, b, a, -b});
  FreeWord gd = word({d, -c, b, a, -b});
  if (h < 0) {
    std::swap(fb, gb);
    std::swap(fc, gc);
    std::swap(fd, gd);
  }
  fwd.img[b - 1] = fb;
  fwd.img[c - 1] = fc;
  fwd.img[d - 1] = fd;
  inv.img[b - 1] = gb;
  inv.img[c - 1] = gc;
  inv.img[d - 1] = gd;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("twist validation failed: ") + what);
}

void validate_twist(const SurfaceAut& f) {
  require(fixes_boundary(f), "boundary word moved");
  FreeHom fg = hom_compose(f.fwd, f.inv);
  FreeHom gf = hom_compose(f.inv, f.fwd);
  for (int k = 1; k <= fg.gens(); ++k) {
    require(fw_equal(fg.img[k - 1], FreeWord{k}), "inverse mismatch");
    require(fw_equal(gf.img[k - 1], FreeWord{k}), "inverse mismatch");
  }
  QMatrix M = homology_action(f);
  QMatrix N = M - QMatrix::identity(M.rows());
  require((N * N).is_zero(), "not a transvection on homology");
  require(determinant(M) == Rational(1), "determinant is not one");
  QMatrix J = intersection_form(f.genus);
  require(M.transpose() * J * M == J, "intersection form not preserved");
}

QMatrix krylov_matrix(const QMatrix& M, const QVec& v) {
  std::vector<QVec> cols;
  QVec w = v;
  for (int k = 0; k < M.rows(); ++k) {
    cols.push_back(w);
    w = M.apply(w);
  }
  return QMatrix::from_cols(cols);
}

QVec find_cyclic_vector(const QMatrix& M) {
  const int n = M.rows();
  std::vector<QVec> cands;
  for (int i = 0; i < n; ++i) {
    QVec e = qvec_zero(n);
    e[i] = 1;
    cands.push_back(e);
  }
  for (int k = 1; k < n; ++k) {
    QVec s = qvec_zero(n);
    for (int i = 0; i <= k; ++i) s[i] = 1;
    cands.push_back(s);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      QVec s = qvec_zero(n);
      s[i] = 1;
      s[j] = 2;
      cands.push_back(s);
    }
  for (const QVec& v : cands)
    if (rank(krylov_matrix(M, v)) == n) return v;
  throw std::logic_error("cyclic vector search failed");
}

// Coordinates of each M * phi_k in the span of the phis.
QMatrix t_action_matrix(const std::vector<QMatrix>& phis, const QMatrix& M) {
  const int n = M.rows();
  const int d = static_cast<int>(phis.size());
  QMatrix flat(n * n, d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat.at(i * n + j, k) = phis[k].at(i, j);
  QMatrix T(d, d);
  for (int k = 0; k < d; ++k) {
    QMatrix mp = M * phis[k];
    QVec rhs(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rhs[i * n + j] = mp.at(i, j);
    QVec x = solve_unique(flat, rhs);
    for (int l = 0; l < d; ++l) T.at(l, k) = x[l];
  }
  return T;
}

// Grams of the boundary form over the given parametrization of equivariant
// maps, one matrix per center coordinate. transport, when present, carries
// the degree two values from the surface frame to the frame of the center
// basis. T is the action of t on the parameter coordinates.
void build_grams(McgResult& r, const std::vector<QMatrix>& phis, const QMatrix& T,
                 const QMatrix& E, const QMatrix* transport,
                 const std::vector<QVec>& center_vecs) {
  const int d = static_cast<int>(phis.size());
  const int rank_c = static_cast<int>(center_vecs.size());
  auto value = [&](const QMatrix& phi) {
    QVec v = qf_value(r.genus, phi);
    if (!qvec_is_zero(qvec_sub(E.apply(v), v)))
      throw std::runtime_error("equivariance violated");
    return v;
  };
  std::vector<QVec> diag;
  diag.reserve(d);
  for (int a = 0; a < d; ++a) diag.push_back(value(phis[a]));
  r.form.dim = d;
  r.form.gram.assign(rank_c, QMatrix(d, d));
  const Rational half(1, 2);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      QVec v = a == b ? diag[a]
                      : qvec_scale(qvec_sub(qvec_sub(value(phis[a] + phis[b]), diag[a]),
                                            diag[b]),
                                   half);
      if (transport) v = transport->apply(v);
      QVec coords = project_to_center(center_vecs, v);
      for (int l = 0; l < rank_c; ++l) {
        r.form.gram[l].at(a, b) = coords[l];
        r.form.gram[l].at(b, a) = coords[l];
      }
    }
  r.sum_gram = QMatrix(d, d);
  for (const QMatrix& g : r.form.gram) r.sum_gram = r.sum_gram + g;
  r.isometry_ok = true;
  QMatrix Tt = T.transpose();
  for (const QMatrix& g : r.form.gram)
    if (Tt * g * T != g) r.isometry_ok = false;
  for (const QMatrix& g : r.form.gram) r.gram_det.push_back(determinant(g));
}

}  // namespace

FreeWord boundary_word(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
  FreeWord z;
  for (int i = 1; i <= genus; ++i)
    z = fw_mul(z, fw_comm(FreeWord{2 * i - 1}, FreeWord{2 * i}));
  return z;
}

int curve_count(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
  return 2 * genus + 1 + (genus == 2 ? 1 : 0);
}

QMatrix intersection_form(int genus) {
  QMatrix J(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    J.at(2 * i, 2 * i + 1) = 1;
    J.at(2 * i + 1, 2 * i) = -1;
  }
  return J;
}

namespace detail {

SurfaceAut twist_raw(int genus, int curve, int ha, int hb, int hc) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
  if (curve < 1 || curve > curve_count(genus))
    throw std::invalid_argument("curve index out of range");
  const int n = 2 * genus;
  const int chain = 2 * genus + 1;
  if (genus == 2 && curve == 6) {
    // The extra genus 2 curve is the image of curve 4 under the inverse
    // twist along curve 5; its twist is the corresponding conjugate.
    SurfaceAut t4 = twist_raw(genus, 4, ha, hb, hc);
    SurfaceAut t5 = twist_raw(genus, 5, ha, hb, hc);
    return aut_compose(aut_inverse(t5), aut_compose(t4, t5));
  }
  SurfaceAut f;
  f.genus = genus;
  f.fwd = hom_identity(n);
  f.inv = hom_identity(n);
  if (curve == 1) {
    core_images(f.fwd, f.inv, 1, ha);
  } else if (curve == chain) {
    core_images(f.fwd, f.inv, n - 1, ha);
  } else if (curve % 2 == 0) {
    transverse_images(f.fwd, f.inv, curve - 1, hb);
  } else {
    connect_images(f.fwd, f.inv, curve - 2, hc);
  }
  return f;
}

}  // namespace detail

SurfaceAut twist_automorphism(int genus, int curve) {
  SurfaceAut f = detail::twist_raw(genus, curve, kHandA, kHandB, kHandC);
  validate_twist(f);
  return f;
}

SurfaceAut aut_identity(int genus) {
  SurfaceAut f;
  f.genus = genus;
  f.fwd = hom_identity(2 * genus);
  f.inv = hom_identity(2 * genus);
  return f;
}

SurfaceAut aut_compose(const SurfaceAut& f, const SurfaceAut& g) {
  if (f.genus != g.genus) throw std::domain_error("genus mismatch");
  SurfaceAut h;
  h.genus = f.genus;
  h.fwd = hom_compose(f.fwd, g.fwd);
  h.inv = hom_compose(g.inv, f.inv);
  return h;
}

SurfaceAut aut_inverse(const SurfaceAut& f) {
  SurfaceAut h;
  h.genus = f.genus;
  h.fwd = f.inv;
  h.inv = f.fwd;
  return h;
}

bool aut_equal(const SurfaceAut& f, const SurfaceAut& g) {
  if (f.genus != g.genus || f.fwd.gens() != g.fwd.gens()) return false;
  for (int k = 0; k < f.fwd.gens(); ++k)
    if (!fw_equal(f.fwd.img[k], g.fwd.img[k])) return false;
  return true;
}

SurfaceAut compose_twists(int genus, const std::vector<int>& tokens) {
  // Tokens compose like functions: the rightmost twist acts first.
  SurfaceAut f = aut_identity(genus);
  for (int tk : tokens) {
    if (tk == 0) throw std::invalid_argument("twist token must be nonzero");
    SurfaceAut t = twist_automorphism(genus, std::abs(tk));
    if (tk < 0) t = aut_inverse(t);
    f = aut_compose(f, t);
  }
  return f;
}

bool fixes_boundary(const SurfaceAut& f) {
  FreeWord z = boundary_word(f.genus);
  return fw_equal(f.fwd.apply(z), z);
}

QMatrix homology_action(const SurfaceAut& f) { return hom_abelianization(f.fwd); }

std::vector<QMatrix> commutant_basis(const QMatrix& M) {
  const int n = M.rows();
  QMatrix K(n * n, n * n);
  // Row (a, b) is the (a, b) entry of X M - M X as a linear form in X.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int j = 0; j < n; ++j) K.at(a * n + b, a * n + j) = K.at(a * n + b, a * n + j) + M.at(j, b);
      for (int i = 0; i < n; ++i) K.at(a * n + b, i * n + b) = K.at(a * n + b, i * n + b) - M.at(a, i);
    }
  std::vector<QMatrix> basis;
  for (const QVec& v : kernel_basis(K)) {
    QMatrix X(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) X.at(i, j) = v[i * n + j];
    basis.push_back(X);
  }
  return basis;
}

std::vector<QMatrix> hf_basis(const SurfaceAut& f) {
  QMatrix M = homology_action(f);
  Poly cp = char_poly(M);
  if (cp.eval(Rational(1)) == Rational(0) || cp.eval(Rational(-1)) == Rational(0))
    throw std::domain_error("degenerate module (Torelli-adjacent case); unsupported");
  return commutant_basis(M);
}

QVec qf_value(int genus, const QMatrix& phi) {
  const int m = 2 * genus;
  QVec v = qvec_zero(comm_dim(m));
  for (int i = 0; i < genus; ++i) {
    QVec c1 = phi.col(2 * i);
    QVec c2 = phi.col(2 * i + 1);
    v = qvec_add(v, qvec_sub(wedge(c1, c2), wedge(c2, c1)));
  }
  return v;
}

McgResult mcg_invariant(const SurfaceAut& f) { return mcg_invariant(f, QVec()); }

McgResult mcg_invariant(const SurfaceAut& f, const QVec& cyclic_vector) {
  McgResult r;
  r.genus = f.genus;
  const int n = 2 * f.genus;
  r.zeta_fixed = fixes_boundary(f);
  r.M = homology_action(f);
  r.char_poly = char_poly(r.M);
  if (r.char_poly.eval(Rational(1)) == Rational(0) ||
      r.char_poly.eval(Rational(-1)) == Rational(0))
    throw std::domain_error("degenerate module (Torelli-adjacent case); unsupported");
  r.divisors = smith_divisors(PolyMatrix::characteristic(r.M));
  std::vector<QMatrix> comm = commutant_basis(r.M);
  r.hf_dimension = static_cast<int>(comm.size());
  r.cyclic = r.divisors.size() == 1;
  QMatrix E = lambda2_matrix(r.M);
  if (r.cyclic) {
    QVec v = cyclic_vector.empty() ? find_cyclic_vector(r.M) : cyclic_vector;
    QMatrix P = krylov_matrix(r.M, v);
    if (rank(P) != n)
      throw std::domain_error("supplied vector does not generate the module");
    QMatrix C = companion_matrix(r.char_poly);
    if (r.M * P != P * C) throw std::logic_error("module transport failed");
    r.center = center_report_for_divisors(r.divisors);
    QMatrix L = lambda2_matrix(inverse(P));
    // Power parametrization u = x + ty + ...: parameter k is t^k, acting
    // on homology as M^k.
    std::vector<QMatrix> phis;
    phis.reserve(n);
    QMatrix mk = QMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
      phis.push_back(mk);
      mk = r.M * mk;
    }
    build_grams(r, phis, C, E, &L, r.center.basis);
  } else {
    // No single cyclic vector exists, so the Grams stay in the surface
    // frame, parametrized by the commutant basis.
    r.center.basis = kernel_basis(QMatrix::identity(E.rows()) - E);
    r.center.rank = static_cast<int>(r.center.basis.size());
    r.center.basis_kind = "echelon";
    r.center.formula_rank = center_rank_formula(r.divisors);
    r.center.notes.push_back("module not cyclic; center basis in the surface frame");
    r.notes.push_back("module not cyclic; Grams parametrized by the commutant basis");
    QMatrix T = t_action_matrix(comm, r.M);
    build_grams(r, comm, T, E, nullptr, r.center.basis);
  }
  return r;
}

MappingTorusPresentation mapping_torus_presentation(const SurfaceAut& f) {
  MappingTorusPresentation p;
  p.genus = f.genus;
  const int n = 2 * f.genus;
  const int gamma = n + 1;
  for (int i = 1; i <= n; ++i) {
    FreeWord r = fw_comm(FreeWord{i}, FreeWord{gamma});
    r = fw_mul(r, f.fwd.img[i - 1]);
    r = fw_mul(r, FreeWord{-i});
    p.relators.push_back(r);
  }
  return p;
}

Poly mapping_torus_alexander(const MappingTorusPresentation& p) {
  const int n = 2 * p.genus;
  std::vector<int> texp(n + 1, 0);
  texp[n] = 1;
  PolyMatrix A(n, n + 1);
  for (int i = 0; i < n; ++i) {
    FoxRow row = fox_row(p.relators[i], texp);
    for (int j = 0; j <= n; ++j) A.at(i, j) = row.d[j];
  }
  Poly g;
  for (int j = 0; j <= n; ++j) {
    Poly m = poly_det(A.drop_col(j));
    if (m.is_zero()) continue;
    g = g.is_zero() ? m : poly_gcd(g, m);
  }
  if (g.is_zero()) return g;
  int v = t_valuation(g);
  if (v > 0) g = poly_exact_div(g, Poly::monomial(v, Rational(1)));
  return monic_normalize(g);
}

}  // namespace nilform
