#include "nilform/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilform {

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  if (n == 0) throw std::invalid_argument("divisors of zero");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Divides out every rational root (with multiplicity); returns the roots.
std::vector<Rational> strip_rational_roots(Poly& g) {
  std::vector<Rational> roots;
  for (;;) {
    if (g.degree() < 1) return roots;
    Poly f = primitive_normalize(g);
    bool found = false;
    for (const mpz_class& q : positive_divisors(f.lead().get_num())) {
      for (const mpz_class& p : positive_divisors(f.coeff(0).get_num())) {
        for (int sign : {1, -1}) {
          Rational r(sign * p, q);
          r.canonicalize();
          if (g.eval(r) != 0) continue;
          Poly lin = Poly::t() - Poly(r);
          while (g.degree() >= 1 && g.eval(r) == 0) {
            g = poly_exact_div(g, lin);
            roots.push_back(r);
          }
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return roots;
  }
}

// Complete search for a monic quadratic factor of g, which must have no
// rational roots. Returns true and divides it out on success.
bool strip_quadratic_factor(Poly& g, Poly& out) {
  Poly f = primitive_normalize(g);
  int d = f.degree();
  mpz_class lead = f.lead().get_num();
  mpz_class c0 = f.coeff(0).get_num();
  // Cauchy root bound R = 1 + max |f_i| / |lead|.
  Rational maxc = 0;
  for (int i = 0; i < d; ++i) {
    Rational a = abs(f.coeff(i));
    if (a > maxc) maxc = a;
  }
  mpz_class leadabs = abs(lead);
  Rational bound = Rational(1) + maxc / Rational(leadabs);
  for (const mpz_class& a : positive_divisors(lead)) {
    // |b| <= 2*a*R for an integer factor a*t^2 + b*t + c of f.
    mpz_class bmax;
    Rational limit = Rational(2) * Rational(a) * bound;
    mpz_cdiv_q(bmax.get_mpz_t(), limit.get_num().get_mpz_t(), limit.get_den().get_mpz_t());
    for (const mpz_class& cd : positive_divisors(c0)) {
      for (int csign : {1, -1}) {
        mpz_class c = csign * cd;
        for (mpz_class babs = 0; babs <= bmax; ++babs) {
          for (int bsign : {1, -1}) {
            if (babs == 0 && bsign < 0) continue;
            mpz_class b = bsign * babs;
            Rational qb(b, a), qc(c, a);
            qb.canonicalize();
            qc.canonicalize();
            Poly q = Poly::monomial(2, 1) + Poly::monomial(1, qb) + Poly(qc);
            PolyDivMod dm = poly_divmod(g, q);
            if (!dm.rem.is_zero()) continue;
            g = dm.quot;
            out = q;
            return true;
          }
        }
      }
    }
  }
  return false;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

Poly cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  // (t^n - 1) divided by the cyclotomic polynomials of the proper divisors.
  Poly num = Poly::monomial(n, 1) - Poly(Rational(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_exact_div(num, cyclotomic(d));
  return num;
}

Poly reciprocal_conjugate(const Poly& p) {
  if (p.is_zero() || p.coeff(0) == 0)
    throw std::invalid_argument("reciprocal conjugate needs nonzero constant term");
  return monic_normalize(p.reverse());
}

Factorization factor_limited(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorization of zero");
  Factorization result;
  std::map<std::vector<Rational>, FactorPower> tally;
  auto record = [&](const Poly& p, int mult, bool proven = true) {
    auto it = tally.find(p.coeffs());
    if (it == tally.end()) {
      tally.emplace(p.coeffs(), FactorPower{p, mult, proven});
    } else {
      it->second.mult += mult;
      it->second.proven = it->second.proven && proven;
    }
  };

  Poly g = monic_normalize(f);
  if (g.degree() >= 1) {
    int v = t_valuation(g);
    if (v > 0) {
      record(Poly::t(), v);
      g = poly_exact_div(g, Poly::monomial(v, 1));
    }
  }
  for (const Rational& r : strip_rational_roots(g)) record(Poly::t() - Poly(r), 1);

  while (g.degree() >= 2) {
    if (g.degree() <= 3) {
      // No rational roots, so degree 2 or 3 is irreducible.
      record(g, 1);
      g = Poly(Rational(1));
      break;
    }
    Poly q;
    if (strip_quadratic_factor(g, q)) {
      record(q, 1);
      continue;
    }
    // No linear or quadratic factor. Degrees 4 and 5 are then irreducible,
    // since any proper factorization would contain one.
    if (g.degree() <= 5) {
      record(g, 1);
      g = Poly(Rational(1));
      break;
    }
    // Cyclotomic recognition for the remaining even-degree cases.
    bool matched = false;
    for (int n = g.degree() + 1; n <= 4 * g.degree() * g.degree() + 4; ++n) {
      if (euler_phi(n) != g.degree()) continue;
      if (g == cyclotomic(n)) {
        record(g, 1);
        g = Poly(Rational(1));
        matched = true;
        break;
      }
    }
    if (!matched) {
      record(g, 1, false);
      result.certified = false;
      g = Poly(Rational(1));
    }
    break;
  }

  for (auto& [key, val] : tally) result.factors.push_back(val);
  return result;
}

Ternary scalar_square_test(const Rational& c, const Poly& f) {
  if (c == 0) throw std::invalid_argument("square test needs a nonzero constant");
  if (f.degree() < 1) throw std::invalid_argument("square test needs a nonconstant modulus");
  // A rational square is a square in every Q-algebra.
  if (rat_is_square(c)) return Ternary::yes;

  Factorization fac = factor_limited(f);
  bool has_unknown = !fac.certified;
  for (const FactorPower& fp : fac.factors) {
    const Poly& p = fp.p;
    if (!fp.proven) continue;  // unresolved remainder, already counted above
    if (p.degree() == 1) {
      // Residue field Q; c is not a rational square here.
      return Ternary::no;
    } else if (p.degree() == 2) {
      // Residue field Q(sqrt(disc)); squares are Q-squares and disc times them.
      Rational disc = p.coeff(1) * p.coeff(1) - Rational(4) * p.coeff(0) * p.coeff(2);
      if (!rat_is_square(c * disc)) return Ternary::no;
    } else {
      has_unknown = true;
    }
  }
  return has_unknown ? Ternary::unknown : Ternary::yes;
}

}  // namespace nilform
