#include "nilform/freegroup.hpp"

#include <map>
#include <stdexcept>

namespace nilform {

FreeWord fw_reduce(const FreeWord& w) {
  FreeWord r;
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("zero letter in word");
    if (!r.empty() && r.back() == -letter) {
      r.pop_back();
    } else {
      r.push_back(letter);
    }
  }
  return r;
}

FreeWord fw_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return fw_reduce(r);
}

FreeWord fw_inv(const FreeWord& a) {
  FreeWord r;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r.push_back(-*it);
  return r;
}

bool fw_equal(const FreeWord& a, const FreeWord& b) { return fw_reduce(a) == fw_reduce(b); }

FreeWord fw_pow(const FreeWord& a, int k) {
  FreeWord r;
  FreeWord base = k >= 0 ? fw_reduce(a) : fw_inv(fw_reduce(a));
  int n = k >= 0 ? k : -k;
  for (int i = 0; i < n; ++i) r = fw_mul(r, base);
  return r;
}

FreeWord fw_conj(const FreeWord& a, const FreeWord& b) { return fw_mul(fw_mul(a, b), fw_inv(a)); }

FreeWord fw_comm(const FreeWord& a, const FreeWord& b) {
  return fw_mul(fw_mul(a, b), fw_mul(fw_inv(a), fw_inv(b)));
}

FreeWord FreeHom::apply(const FreeWord& w) const {
  FreeWord r;
  for (int letter : fw_reduce(w)) {
    int k = letter > 0 ? letter : -letter;
    if (k > gens()) throw std::invalid_argument("word letter outside the generator range");
    FreeWord piece = letter > 0 ? img[k - 1] : fw_inv(img[k - 1]);
    r.insert(r.end(), piece.begin(), piece.end());
  }
  return fw_reduce(r);
}

FreeHom hom_identity(int n) {
  FreeHom h;
  for (int k = 1; k <= n; ++k) h.img.push_back({k});
  return h;
}

FreeHom hom_compose(const FreeHom& f, const FreeHom& g) {
  FreeHom r;
  for (const FreeWord& w : g.img) r.img.push_back(f.apply(w));
  return r;
}

QMatrix hom_abelianization(const FreeHom& f) {
  int n = f.gens();
  QMatrix m(n, n);
  for (int k = 0; k < n; ++k)
    for (int letter : f.img[k]) {
      int j = letter > 0 ? letter : -letter;
      if (j > n) throw std::invalid_argument("image letter outside the generator range");
      m.at(j - 1, k) += letter > 0 ? 1 : -1;
    }
  return m;
}

FoxRow fox_row(const FreeWord& w, const std::vector<int>& texp) {
  int n = static_cast<int>(texp.size());
  // Laurent accumulation per generator: exponent -> coefficient.
  std::vector<std::map<int, Rational>> acc(n);
  int prefix = 0;
  for (int letter : w) {
    int k = letter > 0 ? letter : -letter;
    if (k > n) throw std::invalid_argument("word letter outside the generator range");
    if (letter > 0) {
      acc[k - 1][prefix] += 1;
      prefix += texp[k - 1];
    } else {
      prefix -= texp[k - 1];
      acc[k - 1][prefix] -= 1;
    }
  }
  int minexp = 0;
  for (const auto& m : acc)
    for (const auto& [e, c] : m)
      if (c != 0 && e < minexp) minexp = e;
  FoxRow row;
  row.shift = -minexp;
  for (const auto& m : acc) {
    Poly p;
    for (const auto& [e, c] : m)
      if (c != 0) p = p + Poly::monomial(e + row.shift, c);
    row.d.push_back(p);
  }
  return row;
}

}  // namespace nilform
