#include "nilform/rational.hpp"

#include <stdexcept>

namespace nilform {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_parse(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rational r(t);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool rat_is_square(const Rational& r) {
  if (r < 0) return false;
  // Canonical form has coprime num/den, so each must be a perfect square.
  return mpz_perfect_square_p(r.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.get_den().get_mpz_t()) != 0;
}

}  // namespace nilform
