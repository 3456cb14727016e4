#pragma once

#include <string>
#include <vector>

#include "nilform/rational.hpp"

namespace nilform {

// Univariate polynomial over Q, dense coefficient vector, index = degree.
// The zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly t();                              // the variable
  static Poly monomial(int k, const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int k) const;           // 0 outside range
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly pow(int k) const;

  // t^degree * p(1/t): coefficient vector reversed.
  Poly reverse() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivMod {
  Poly quot;
  Poly rem;
};

// Euclidean division by a nonzero divisor.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

// Exact quotient; throws if the division leaves a remainder.
Poly poly_exact_div(const Poly& a, const Poly& b);

// Monic gcd (gcd of 0,0 is 0).
Poly poly_gcd(const Poly& a, const Poly& b);

// True iff p(t) = +- t^deg p(1/t), i.e. the coefficient vector is
// palindromic up to one global sign.
bool reciprocal_check(const Poly& p);

// Scales a nonzero polynomial to leading coefficient 1.
Poly monic_normalize(const Poly& p);

// Scales a nonzero polynomial to coprime integer coefficients with
// positive leading coefficient, for display.
Poly primitive_normalize(const Poly& p);

// Largest k with t^k dividing p (p nonzero).
int t_valuation(const Poly& p);

// Parses text like "1 - t + t^2", "2*t^2 - 5*t + 2", "-1/2*t^3 + t".
Poly poly_parse(const std::string& s);

// Ascending-degree rendering, e.g. "1 - t + t^2"; zero renders as "0".
std::string poly_str(const Poly& p);

}  // namespace nilform
