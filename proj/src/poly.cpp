#include "nilform/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nilform {

namespace {
const Rational kZero = 0;
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::t() { return monomial(1, 1); }

Poly Poly::monomial(int k, const Rational& c) {
  if (k < 0) throw std::invalid_argument("negative monomial degree");
  Poly p;
  if (c != 0) {
    p.c_.assign(k + 1, kZero);
    p.c_[k] = c;
  }
  return p;
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const Rational& Poly::lead() const {
  if (is_zero()) throw std::logic_error("lead of zero polynomial");
  return c_.back();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), kZero);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, kZero);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  Poly r;
  for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
  r.trim();
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Poly acc(Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Poly Poly::reverse() const {
  Poly r = *this;
  std::reverse(r.c_.begin(), r.c_.end());
  r.trim();
  return r;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly rem = a;
  std::vector<Rational> q;
  int db = b.degree();
  if (rem.degree() >= db) q.assign(rem.degree() - db + 1, 0);
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    Rational c = rem.lead() / b.lead();
    q[k] = c;
    rem = rem - Poly::monomial(k, c) * b;
  }
  return {Poly(std::move(q)), rem};
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
  PolyDivMod d = poly_divmod(a, b);
  if (!d.rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return d.quot;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).rem;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return monic_normalize(x);
}

bool reciprocal_check(const Poly& p) {
  if (p.is_zero()) return false;
  int d = p.degree();
  // Compare against +reverse and -reverse.
  Poly rev = p.reverse();
  if (rev.degree() != d) return false;  // p(0) = 0 can never be palindromic
  return p == rev || p == -rev;
}

Poly monic_normalize(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("monic normalization of zero");
  return p * (Rational(1) / p.lead());
}

Poly primitive_normalize(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("primitive normalization of zero");
  // Common denominator, then divide by content.
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> num(p.coeffs().size());
  mpz_class content = 0;
  for (size_t i = 0; i < num.size(); ++i) {
    num[i] = p.coeffs()[i].get_num() * (den / p.coeffs()[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num[i].get_mpz_t());
  }
  if (p.lead() < 0) content = -content;
  std::vector<Rational> out(num.size());
  for (size_t i = 0; i < num.size(); ++i) out[i] = Rational(num[i] / content);
  return Poly(std::move(out));
}

int t_valuation(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("t-valuation of zero");
  int v = 0;
  while (p.coeff(v) == 0) ++v;
  return v;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool done() {
    skip_ws();
    return i >= s.size();
  }

  // Returns the next meaningful char, mapping U+2212 to '-'.
  char peek() {
    skip_ws();
    if (i >= s.size()) return '\0';
    if (static_cast<unsigned char>(s[i]) == 0xE2 && i + 2 < s.size() &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      return '-';
    }
    return s[i];
  }

  void advance() {
    if (static_cast<unsigned char>(s[i]) == 0xE2) {
      i += 3;
    } else {
      ++i;
    }
  }

  mpz_class read_uint() {
    skip_ws();
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits.push_back(s[i]);
      ++i;
    }
    if (digits.empty()) throw std::invalid_argument("expected number in polynomial");
    return mpz_class(digits);
  }
};

}  // namespace

Poly poly_parse(const std::string& s) {
  Lexer lx{s};
  Poly result;
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      lx.advance();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between polynomial terms");
    }
    first = false;

    Rational coef = 1;
    bool saw_coef = false;
    c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = lx.read_uint();
      mpz_class den = 1;
      if (lx.peek() == '/') {
        lx.advance();
        den = lx.read_uint();
        if (den == 0) throw std::invalid_argument("zero denominator in polynomial");
      }
      coef = Rational(num, den);
      coef.canonicalize();
      saw_coef = true;
    }

    int deg = 0;
    c = lx.peek();
    if (c == '*') {
      if (!saw_coef) throw std::invalid_argument("stray '*' in polynomial");
      lx.advance();
      c = lx.peek();
      if (c != 't') throw std::invalid_argument("expected 't' after '*'");
    }
    if (c == 't') {
      lx.advance();
      deg = 1;
      if (lx.peek() == '^') {
        lx.advance();
        deg = static_cast<int>(lx.read_uint().get_si());
        if (deg < 0) throw std::invalid_argument("negative exponent");
      }
    } else if (!saw_coef) {
      throw std::invalid_argument("expected term in polynomial");
    }

    result = result + Poly::monomial(deg, coef * sign);
  }
  if (first) throw std::invalid_argument("empty polynomial");
  return result;
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeff(k);
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    bool unit = (a == 1);
    if (k == 0 || !unit) out += rat_str(a);
    if (k > 0) {
      if (!unit) out += "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace nilform
