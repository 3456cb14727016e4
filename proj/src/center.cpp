#include "nilform/center.hpp"

#include <map>
#include <stdexcept>

#include "nilform/factor.hpp"
#include "nilform/nil2.hpp"
#include "nilform/tau.hpp"

namespace nilform {

std::vector<QVec> center_basis(const QMatrix& E) {
  if (E.rows() != E.cols()) throw std::invalid_argument("square matrix required");
  return kernel_basis(QMatrix::identity(E.rows()) - E);
}

std::optional<int> center_rank_formula(const std::vector<Poly>& divisors) {
  if (divisors.empty()) return 0;
  Poly delta(Rational(1));
  for (const Poly& d : divisors) delta = delta * d;
  if (delta.eval(1) == 0 || delta.eval(-1) == 0)
    throw std::domain_error("Theorem 2.1 hypothesis violated");

  // Exponent of each irreducible factor in each divisor.
  std::map<std::vector<Rational>, std::pair<Poly, std::vector<int>>> exps;
  int n = static_cast<int>(divisors.size());
  for (int d = 0; d < n; ++d) {
    Factorization fac = factor_limited(divisors[d]);
    if (!fac.certified) return std::nullopt;
    for (const FactorPower& fp : fac.factors) {
      auto it = exps.find(fp.p.coeffs());
      if (it == exps.end())
        it = exps.emplace(fp.p.coeffs(), std::make_pair(fp.p, std::vector<int>(n, 0))).first;
      it->second.second[d] += fp.mult;
    }
  }

  // Pair each irreducible factor with its reciprocal conjugate; a factor of
  // t would have no conjugate, but the gate above already excludes it only
  // at +-1, so check explicitly.
  for (const auto& [key, val] : exps)
    if (val.first.coeff(0) == 0) return std::nullopt;

  int rank = 0;
  std::vector<std::vector<Rational>> consumed;
  for (const auto& [key, val] : exps) {
    const Poly& p = val.first;
    const std::vector<int>& e = val.second;
    Poly pc = reciprocal_conjugate(p);
    if (pc == p) {
      int pairs = 0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) pairs += std::min(e[u], e[v]);
      rank += p.degree() / 2 * pairs;
    } else {
      bool seen = false;
      for (const auto& k : consumed) seen = seen || k == key;
      if (seen) continue;
      auto it = exps.find(pc.coeffs());
      if (it == exps.end()) continue;  // conjugate absent, contributes nothing
      consumed.push_back(pc.coeffs());
      const std::vector<int>& ec = it->second.second;
      int pairs = 0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) pairs += std::min(e[u], ec[v]);
      rank += p.degree() * pairs;
    }
  }
  return rank;
}

namespace {

void check_canonical_input(const Poly& f) {
  if (f.is_zero() || f.lead() != 1 || f.coeff(0) != 1 || f.degree() % 2 != 0 || f.degree() < 2 ||
      !reciprocal_check(f))
    throw std::invalid_argument("canonical central elements need a monic reciprocal polynomial of even degree with constant term 1");
}

}  // namespace

std::vector<QVec> canonical_central_elements(const Poly& f) {
  check_canonical_input(f);
  int g = f.degree() / 2;
  if (g > 3) throw std::invalid_argument("closed-form central elements are tabulated up to degree 6");
  int m = 2 * g;
  auto a = [&](int i) { return f.coeff(i); };
  std::vector<QVec> out;
  auto fresh = [&]() { return qvec_zero(comm_dim(m)); };
  auto set = [&](QVec& v, int i, int j, const Rational& c) { v[pair_index(m, i - 1, j - 1)] = c; };

  if (g == 1) {
    QVec c1 = fresh();
    set(c1, 1, 2, 1);
    out.push_back(c1);
  } else if (g == 2) {
    QVec c1 = fresh();
    set(c1, 1, 2, 1);
    set(c1, 1, 4, 1);
    set(c1, 2, 3, Rational(1) - a(2));
    set(c1, 3, 4, 1);
    out.push_back(c1);
    QVec c2 = fresh();
    set(c2, 1, 3, 1);
    set(c2, 2, 3, a(1));
    set(c2, 2, 4, 1);
    out.push_back(c2);
  } else {
    QVec c1 = fresh();
    set(c1, 1, 2, 1);
    set(c1, 1, 6, 1);
    set(c1, 2, 3, Rational(1) - a(2));
    set(c1, 2, 4, -a(3));
    set(c1, 2, 5, -a(4));
    set(c1, 3, 4, Rational(1) - a(2));
    set(c1, 3, 5, -a(3));
    set(c1, 4, 5, Rational(1) - a(4));
    set(c1, 5, 6, 1);
    out.push_back(c1);
    QVec c2 = fresh();
    set(c2, 1, 3, 1);
    set(c2, 1, 5, 1);
    set(c2, 2, 3, a(1));
    set(c2, 2, 4, 1);
    set(c2, 2, 5, a(1));
    set(c2, 2, 6, 1);
    set(c2, 3, 4, a(1) - a(3));
    set(c2, 3, 5, 1);
    set(c2, 4, 5, a(1));
    set(c2, 4, 6, 1);
    out.push_back(c2);
    QVec c3 = fresh();
    set(c3, 1, 4, 1);
    set(c3, 2, 4, a(1));
    set(c3, 2, 5, 1);
    set(c3, 3, 4, a(2));
    set(c3, 3, 5, a(1));
    set(c3, 3, 6, 1);
    out.push_back(c3);
  }
  return out;
}

std::vector<QVec> canonical_recursion_elements(const Poly& f) {
  check_canonical_input(f);
  int g = f.degree() / 2;
  int m = 2 * g;
  auto a = [&](int i) { return f.coeff(i); };
  std::vector<QVec> out;
  for (int l = 1; l <= g; ++l) {
    // d[i][j], 1-based, zero on and below the diagonal.
    std::vector<std::vector<Rational>> d(m + 1, std::vector<Rational>(m + 1, Rational(0)));
    for (int j = 2; j <= m; ++j) d[1][j] = (j <= g) ? Rational(j - 1 == l) : Rational(m - j + 1 == l);
    for (int i = 2; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        int x = (i <= g) ? l : m - l;
        int y = (j <= g) ? l : m - l;
        d[i][j] = d[i - 1][j - 1] - a(j - 1) * Rational(i - 1 == x) + a(j - 2) * Rational(j - 1 == y);
      }
    QVec v = qvec_zero(comm_dim(m));
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) v[pair_index(m, i - 1, j - 1)] = d[i][j];
    out.push_back(v);
  }
  return out;
}

namespace {

bool all_fixed(const QMatrix& E, const std::vector<QVec>& vs) {
  for (const QVec& v : vs)
    if (!qvec_is_zero(qvec_sub(E.apply(v), v))) return false;
  return true;
}

bool spans_exactly(const std::vector<QVec>& vs, int target_rank) {
  if (static_cast<int>(vs.size()) != target_rank) return false;
  if (vs.empty()) return true;
  return rank(QMatrix::from_rows(vs)) == target_rank;
}

}  // namespace

CenterReport center_report_for_poly(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("module polynomial must be nonconstant");
  Poly fm = monic_normalize(f);
  CenterReport rep;

  if (fm.coeff(0) == 0) {
    // t divides the polynomial, so t does not act invertibly and no
    // semidirect product is defined. Report the fixed-space rank anyway.
    Poly red = poly_exact_div(fm, Poly::monomial(t_valuation(fm), 1));
    rep.notes.push_back("polynomial is divisible by t; the module action is not invertible");
    if (red.degree() >= 1) {
      QMatrix E = lambda2_matrix(companion_matrix(red));
      rep.basis = center_basis(E);
    }
    rep.rank = static_cast<int>(rep.basis.size());
    rep.basis_kind = "echelon";
    return rep;
  }

  QMatrix T = companion_matrix(fm);
  QMatrix E = lambda2_matrix(T);
  std::vector<QVec> ker = center_basis(E);
  rep.rank = static_cast<int>(ker.size());
  rep.basis = ker;
  rep.basis_kind = "echelon";

  try {
    rep.formula_rank = center_rank_formula({fm});
    if (rep.formula_rank && *rep.formula_rank != rep.rank)
      rep.notes.push_back("factor-pairing rank disagrees with the kernel rank");
  } catch (const std::domain_error&) {
    rep.notes.push_back("polynomial vanishes at 1 or -1; the factor-pairing rank count does not apply");
  }

  bool canonical_shape = fm.coeff(0) == 1 && fm.degree() % 2 == 0 && reciprocal_check(fm);
  if (canonical_shape) {
    int g = fm.degree() / 2;
    std::vector<QVec> rec = canonical_recursion_elements(fm);
    bool rec_ok = all_fixed(E, rec) && spans_exactly(rec, rep.rank);
    if (g <= 3) {
      std::vector<QVec> closed = canonical_central_elements(fm);
      bool closed_ok = all_fixed(E, closed) && spans_exactly(closed, rep.rank);
      if (closed_ok) {
        rep.basis = closed;
        rep.basis_kind = "canonical";
        if (!rec_ok)
          rep.notes.push_back(
              "documented recurrence for the central elements is not fixed by the induced action; "
              "closed-form elements validated against the kernel were used instead");
        else if (rec != closed)
          rep.notes.push_back(
              "documented recurrence disagrees with the closed-form central elements; "
              "the validated closed forms were used");
      } else if (rec_ok) {
        rep.basis = rec;
        rep.basis_kind = "canonical";
        rep.notes.push_back("closed-form central elements failed validation; recurrence used instead");
      } else {
        rep.notes.push_back("no canonical central elements validated; echelon kernel basis reported");
      }
    } else {
      if (rec_ok) {
        rep.basis = rec;
        rep.basis_kind = "canonical";
      } else {
        rep.notes.push_back(
            "recurrence candidates for the central elements failed validation; echelon kernel basis reported");
      }
    }
  }
  return rep;
}

CenterReport center_report_for_divisors(const std::vector<Poly>& divisors) {
  if (divisors.empty()) throw std::invalid_argument("no module divisors given");
  if (divisors.size() == 1) return center_report_for_poly(divisors[0]);
  CenterReport rep;
  std::vector<Poly> monic;
  for (const auto& d : divisors) {
    monic.push_back(monic_normalize(d));
    if (monic.back().coeff(0) == 0)
      throw std::invalid_argument("module divisor is divisible by t");
  }
  QMatrix E = lambda2_matrix(block_companion(monic));
  rep.basis = center_basis(E);
  rep.rank = static_cast<int>(rep.basis.size());
  rep.basis_kind = "echelon";
  rep.notes.push_back("module is not cyclic; echelon kernel basis reported");
  try {
    rep.formula_rank = center_rank_formula(monic);
    if (rep.formula_rank && *rep.formula_rank != rep.rank)
      rep.notes.push_back("factor-pairing rank disagrees with the kernel rank");
  } catch (const std::domain_error&) {
    rep.notes.push_back("some divisor vanishes at 1 or -1; the factor-pairing rank count does not apply");
  }
  return rep;
}

QVec project_to_center(const std::vector<QVec>& basis, const QVec& v) {
  if (basis.empty()) {
    if (!qvec_is_zero(v)) throw std::domain_error("value is not central");
    return {};
  }
  try {
    return solve_unique(QMatrix::from_cols(basis), v);
  } catch (const std::domain_error&) {
    throw std::domain_error("value is not in the span of the central basis");
  }
}

}  // namespace nilform
