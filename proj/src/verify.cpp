#include "nilform/verify.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "nilform/center.hpp"
#include "nilform/factor.hpp"
#include "nilform/knot.hpp"
#include "nilform/mcg.hpp"
#include "nilform/report.hpp"
#include "nilform/table.hpp"
#include "nilform/tau.hpp"

namespace nilform {

namespace {

Poly P(const std::string& s) { return poly_parse(s); }

struct Rng {
  uint64_t s;

  explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }

  int next_int(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1)); }

  Rational next_rat() {
    Rational r(next_int(-6, 6), next_int(1, 4));
    r.canonicalize();
    return r;
  }

  QVec next_vec(int n) {
    QVec v(static_cast<size_t>(n));
    for (auto& x : v) x = next_rat();
    return v;
  }

  QMatrix next_mat(int r, int c) {
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = next_rat();
    return m;
  }

  QMatrix next_invertible(int n) {
    for (;;) {
      QMatrix m = next_mat(n, n);
      if (determinant(m) != 0) return m;
    }
  }
};

struct Recorder {
  std::vector<VerifyCase> cases;

  // Runs one case body; any exception turns into a failure row, so a broken
  // input (missing table, bad entry) never aborts the remaining cases.
  void run(int crit, const std::string& name, const std::string& expected,
           const std::function<bool(VerifyCase&)>& body) {
    VerifyCase c;
    c.criterion = crit;
    c.name = name;
    c.expected = expected;
    try {
      c.status = body(c) ? "pass" : "fail";
    } catch (const std::exception& e) {
      c.status = "fail";
      if (!c.notes.empty()) c.notes += "; ";
      c.notes += e.what();
    }
    cases.push_back(c);
  }

  void skip(int crit, const std::string& name, const std::string& expected,
            const std::string& note) {
    VerifyCase c;
    c.criterion = crit;
    c.name = name;
    c.expected = expected;
    c.status = "skipped";
    c.notes = note;
    cases.push_back(c);
  }
};

QMatrix gram_from_terms(int d, const std::vector<std::tuple<int, int, Rational>>& terms) {
  QMatrix g(d, d);
  for (auto& [i, j, c] : terms) {
    if (i == j)
      g.at(i, i) = c;
    else {
      g.at(i, j) = g.at(i, j) + c / 2;
      g.at(j, i) = g.at(j, i) + c / 2;
    }
  }
  return g;
}

std::string poly_list_str(const std::vector<Poly>& ps) {
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += "; ";
    out += poly_str(ps[i]);
  }
  return out;
}

std::string vec_str(const std::vector<Rational>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i].get_str();
  }
  return out + ")";
}

std::string witness_str(const FormWitness& w) {
  std::string out = "witness u = " + vec_str(w.u) + ", c = " + w.c.get_str();
  if (w.perm.size() > 1) {
    out += ", perm = (";
    for (size_t i = 0; i < w.perm.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(w.perm[i]);
    }
    out += ")";
  }
  return out;
}

// The display frame of a knot form: alternating signs on the power basis.
// The t-action conjugates by the same diagonal matrix.
QuadForm display_form(const KnotResult& r) {
  QuadForm q;
  q.dim = r.form.dim;
  for (const auto& g : r.form.gram) q.gram.push_back(alternate_basis(g));
  return q;
}

QMatrix display_action(const KnotResult& r) { return alternate_basis(r.M); }

// Shared data: the bundled knots are computed once and reused by every
// criterion that loops over the table.
struct Context {
  VerifyOptions opt;
  std::optional<KnotTable> table;
  std::string table_error;
  std::map<std::string, KnotResult> knots;
  std::map<std::string, std::string> knot_errors;

  explicit Context(const VerifyOptions& o) : opt(o) {
    try {
      table = load_knot_table(o.table_path);
    } catch (const std::exception& e) {
      table_error = e.what();
      return;
    }
    for (const auto& [name, pd] : table->entries) {
      try {
        knots.emplace(name, knot_invariant(pd));
      } catch (const std::exception& e) {
        knot_errors[name] = e.what();
      }
    }
  }

  // Fetches a computed knot or throws the reason it is unavailable.
  const KnotResult& knot(const std::string& name) const {
    auto it = knots.find(name);
    if (it != knots.end()) return it->second;
    auto err = knot_errors.find(name);
    if (err != knot_errors.end()) throw std::runtime_error(name + ": " + err->second);
    throw std::runtime_error(table_error.empty() ? "knot not in table: " + name : table_error);
  }
};

void criterion_trefoil(Recorder& rec, const Context& ctx) {
  rec.run(1, "3_1 end-to-end",
          "divisors 1 - t + t^2; center rank 1; form x^2 - x*y + y^2",
          [&](VerifyCase& c) {
            const KnotResult& r = ctx.knot("3_1");
            std::string disp = r.form.gram.empty() ? "-" : knot_display(r.form.gram[0]);
            c.computed = "divisors " + poly_list_str(r.divisors) + "; center rank " +
                         std::to_string(r.center.rank) + "; form " + disp;
            return c.computed == c.expected;
          });
}

void criterion_degree2(Recorder& rec, const Context& ctx) {
  struct Case {
    const char* name;
    int diag, off;
  } goldens[] = {{"4_1", 1, -3}, {"5_2", 2, -3}, {"6_1", 2, -5}};
  for (const auto& g : goldens) {
    QMatrix target = gram_from_terms(
        2, {{0, 0, Rational(g.diag)}, {0, 1, Rational(g.off)}, {1, 1, Rational(g.diag)}});
    std::string expected = quadform_str(target);
    rec.run(2, std::string(g.name) + " displayed form", expected, [&, target](VerifyCase& c) {
      const KnotResult& r = ctx.knot(g.name);
      if (r.form.gram.size() != 1) {
        c.computed = "center rank " + std::to_string(r.center.rank);
        return false;
      }
      c.computed = knot_display(r.form.gram[0]);
      if (c.computed == c.expected) {
        c.notes = "exact";
        return true;
      }
      // Different arc labelings of the same diagram are reconciled by a
      // polynomial substitution with square scalar, folded to c = 1.
      QuadForm tq{2, {target}};
      FormWitness w = find_form_witness(display_form(r), tq, display_action(r), false, 6, true);
      if (w.found && fold_witness_scalar(w) && w.c == 1) {
        c.notes = "accepted by unit-substitution " + witness_str(w);
        return true;
      }
      return false;
    });
  }
}

void criterion_degree4(Recorder& rec, const Context& ctx) {
  // Published coordinate pairs in the power-basis arc parametrization.
  QuadForm g51{4,
               {gram_from_terms(4, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {3, 2, 1}, {1, 2, 1}, {2, 2, 1}, {3, 3, 1}}),
                gram_from_terms(4, {{3, 0, -1}, {3, 1, 1}, {0, 1, 1}, {3, 2, 1}, {0, 2, 1}, {1, 2, 1}})}};
  QuadForm g62{4,
               {gram_from_terms(4, {{3, 3, 1}, {0, 3, 2}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 3, 1}, {1, 2, 1}, {2, 2, 1}}),
                gram_from_terms(4, {{3, 3, -2}, {0, 3, 1}, {0, 0, -2}, {1, 3, 3}, {0, 1, -1}, {1, 1, -2}, {2, 3, -1}, {0, 2, 3}, {1, 2, -1}, {2, 2, -2}})}};
  QuadForm g63{4,
               {gram_from_terms(4, {{3, 3, -1}, {0, 3, 6}, {0, 0, -1}, {1, 3, 2}, {0, 1, -1}, {1, 1, -1}, {2, 3, -1}, {0, 2, 2}, {1, 2, -1}, {2, 2, -1}}),
                gram_from_terms(4, {{3, 3, 2}, {0, 3, -9}, {0, 0, 2}, {1, 3, -1}, {0, 1, 3}, {1, 1, 2}, {2, 3, 3}, {0, 2, -1}, {1, 2, 3}, {2, 2, 2}})}};
  struct Case {
    const char* name;
    const QuadForm* golden;
  } cases[] = {{"5_1", &g51}, {"6_2", &g62}, {"6_3", &g63}};

  std::vector<std::vector<int>> perms;
  for (const auto& k : cases) {
    rec.run(3, std::string(k.name) + " coordinate pair",
            "documented pair up to unit substitution, shared permutation",
            [&, k](VerifyCase& c) {
              const KnotResult& r = ctx.knot(k.name);
              if (r.form.gram.size() != 2) {
                c.computed = "center rank " + std::to_string(r.center.rank);
                return false;
              }
              FormWitness w = find_form_witness(r.form, *k.golden, r.M, true, 8, true);
              if (!w.found) {
                c.computed = "no witness up to height 8";
                return false;
              }
              bool folded = fold_witness_scalar(w);
              c.computed = witness_str(w);
              if (folded && w.c == 1) perms.push_back(w.perm);
              return folded && w.c == 1;
            });
  }
  rec.run(3, "degree-4 shared permutation", "one permutation for all three knots",
          [&](VerifyCase& c) {
            if (perms.size() != 3) {
              c.computed = "only " + std::to_string(perms.size()) + " pairs matched";
              return false;
            }
            bool same = perms[0] == perms[1] && perms[1] == perms[2];
            c.computed = same ? "shared" : "mixed";
            return same;
          });
}

void criterion_pretzel(Recorder& rec) {
  KnotResult a = knot_invariant(pretzel_pd(3, 3, -3));
  KnotResult b = knot_invariant(pretzel_pd(9, 3, -3));
  QuadForm doc_a{2, {gram_from_terms(2, {{0, 0, 12}, {0, 1, 30}, {1, 1, 12}})}};
  QuadForm doc_b{2, {gram_from_terms(2, {{0, 0, 6}, {0, 1, 15}, {1, 1, 6}})}};

  rec.run(4, "pretzel displayed values",
          "12*x^2 + 30*x*y + 12*y^2 and 6*x^2 + 15*x*y + 6*y^2 up to unit substitution",
          [&](VerifyCase& c) {
            FormWitness wa = find_form_witness(a.form, doc_a, a.M, false, 6, true);
            FormWitness wb = find_form_witness(b.form, doc_b, b.M, false, 6, true);
            bool ok = wa.found && fold_witness_scalar(wa) && wa.c == 1 && wb.found &&
                      fold_witness_scalar(wb) && wb.c == 1;
            c.computed = wa.found ? "(3,3,-3) " + witness_str(wa) : "(3,3,-3): no witness";
            c.computed += wb.found ? "; (9,3,-3) " + witness_str(wb) : "; (9,3,-3): no witness";
            return ok;
          });

  rec.run(4, "pretzel proportionality", "proportionality witness with c = 2",
          [&](VerifyCase& c) {
            FormWitness w = find_form_witness(a.form, b.form, a.M, false, 6);
            if (!w.found) {
              c.computed = "no witness";
              return false;
            }
            c.computed = witness_str(w);
            return w.c == 2;
          });

  rec.run(4, "pretzel inequivalence", "scalar 2 is not a square times a unit norm",
          [&](VerifyCase& c) {
            Ternary t = scalar_square_test(Rational(2), P("2*t^2 - 5*t + 2"));
            c.computed = t == Ternary::no    ? "square test: no; forms inequivalent"
                         : t == Ternary::yes ? "square test: yes"
                                             : "square test: unknown";
            return t == Ternary::no;
          });
}

void criterion_center_lists(Recorder& rec) {
  rec.run(5, "central basis, quadratic module", "1 closed-form element, fixed by the action",
          [&](VerifyCase& c) {
            QMatrix E = lambda2_matrix(companion_matrix(P("1 - t + t^2")));
            auto v = canonical_central_elements(P("1 - t + t^2"));
            bool ok = v.size() == 1 && E.apply(v[0]) == v[0];
            c.computed = std::to_string(v.size()) + " elements, fixed: " + (ok ? "yes" : "no");
            return ok;
          });

  rec.run(5, "central basis, quartic modules", "2 closed-form elements, fixed, generic coefficients",
          [&](VerifyCase& c) {
            int checked = 0;
            for (auto [a1, a2] : std::vector<std::pair<long, long>>{
                     {-1, 1}, {-3, 3}, {-3, 5}, {2, 7}, {0, 0}, {4, -9}}) {
              Poly f(std::vector<Rational>{1, Rational(a1), Rational(a2), Rational(a1), 1});
              QMatrix E = lambda2_matrix(companion_matrix(f));
              auto v = canonical_central_elements(f);
              if (v.size() != 2) return false;
              for (const QVec& x : v)
                if (!(E.apply(x) == x)) return false;
              ++checked;
            }
            c.computed = std::to_string(checked) + " coefficient picks, all fixed";
            return true;
          });

  rec.run(5, "central basis, sextic modules", "3 closed-form elements, fixed, generic coefficients",
          [&](VerifyCase& c) {
            int checked = 0;
            for (auto [a1, a2, a3] : std::vector<std::tuple<long, long, long>>{
                     {-1, 1, -1}, {2, 3, 5}, {0, 0, 0}, {-2, 0, 1}, {3, -4, 7}}) {
              Poly f(std::vector<Rational>{1, Rational(a1), Rational(a2), Rational(a3),
                                           Rational(a2), Rational(a1), 1});
              QMatrix E = lambda2_matrix(companion_matrix(f));
              auto v = canonical_central_elements(f);
              if (v.size() != 3) return false;
              for (const QVec& x : v)
                if (!(E.apply(x) == x)) return false;
              ++checked;
            }
            c.computed = std::to_string(checked) + " coefficient picks, all fixed";
            return true;
          });

  rec.run(5, "recurrence discrepancy",
          "literal recurrence misses fixedness by (a2 - a1) e_{2,4}; closed form validated",
          [&](VerifyCase& c) {
            Poly f(std::vector<Rational>{1, Rational(-3), Rational(7), Rational(-3), 1});
            auto recs = canonical_recursion_elements(f);
            auto closed = canonical_central_elements(f);
            if (recs.size() != 2 || closed.size() != 2) return false;
            QVec diff = qvec_sub(recs[0], closed[0]);
            QVec expect = qvec_zero(comm_dim(4));
            expect[static_cast<size_t>(pair_index(4, 1, 3))] = Rational(7) - Rational(-3);
            QMatrix E = lambda2_matrix(companion_matrix(f));
            bool surfaced = false;
            for (const auto& n : center_report_for_poly(P("1 - t + t^2 - t^3 + t^4")).notes)
              surfaced = surfaced || n.find("recurrence") != std::string::npos;
            bool ok = diff == expect && recs[1] == closed[1] && !(E.apply(recs[0]) == recs[0]) &&
                      surfaced;
            c.computed = ok ? "discrepancy reproduced and surfaced in report notes"
                            : "discrepancy shape changed";
            return ok;
          });
}

void criterion_rank_oracle(Recorder& rec, const Context& ctx) {
  rec.run(6, "rank formula against the kernel", "at least 30 certified modules, zero disagreements",
          [&](VerifyCase& c) {
            std::vector<Poly> corpus = {
                P("1 - t + t^2"),
                P("1 - t + t^2 - t^3 + t^4"),
                P("1 - 2*t + 3*t^2 - 2*t^3 + t^4"),
                P("t^2 - 3*t + 1"),
                P("2*t^2 - 5*t + 2"),
                P("1 - 3*t + 3*t^2 - 3*t^3 + t^4"),
                P("1 - 3*t + 5*t^2 - 3*t^3 + t^4"),
                P("1 - t + t^2 - t^3 + t^4 - t^5 + t^6"),
                P("1 + 2*t + 3*t^2 + 5*t^3 + 3*t^4 + 2*t^5 + t^6"),
                P("1 - t + t^2") * P("1 - t + t^2"),
                P("1 - t + t^2") * P("t^2 - 3*t + 1"),
            };
            for (int n : {5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 22, 24}) corpus.push_back(cyclotomic(n));
            Rng rng(ctx.opt.lift_seed * 7919 + 5);
            while (corpus.size() < 36) {
              int k = rng.next_int(2, 5);
              Poly f(Rational(1));
              for (int i = 0; i < k; ++i) {
                int a;
                do
                  a = rng.next_int(-6, 6);
                while (a == 2 || a == -2);
                f = f * Poly(std::vector<Rational>{1, Rational(a), 1});
              }
              corpus.push_back(f);
            }
            int certified = 0;
            for (const Poly& f : corpus) {
              Poly m = monic_normalize(f);
              if (!reciprocal_check(m) || m.degree() > 10 || m.eval(1) == 0 || m.eval(-1) == 0) {
                c.computed = "corpus member breaks its own hypothesis: " + poly_str(m);
                return false;
              }
              auto formula = center_rank_formula({m});
              if (!formula) continue;
              QMatrix E = lambda2_matrix(companion_matrix(m));
              int kernel = static_cast<int>(center_basis(E).size());
              if (*formula != kernel) {
                c.computed = "disagreement at " + poly_str(m) + ": formula " +
                             std::to_string(*formula) + ", kernel " + std::to_string(kernel);
                return false;
              }
              ++certified;
            }
            c.computed = std::to_string(certified) + " of " + std::to_string(corpus.size()) +
                         " certified, 0 disagreements";
            return certified >= 30;
          });
}

void criterion_lift_independence(Recorder& rec, const Context& ctx) {
  if (!ctx.table) {
    rec.run(7, "lift independence", "grams identical for 20 random lifts",
            [&](VerifyCase&) -> bool { throw std::runtime_error(ctx.table_error); });
    return;
  }
  for (const auto& [name, pd] : ctx.table->entries) {
    rec.run(7, name + " lift independence", "grams identical for 20 random lifts",
            [&, name, pd](VerifyCase& c) {
              const KnotResult& r0 = ctx.knot(name);
              if (r0.degenerate) {
                c.computed = "degenerate module, nothing to vary";
                return true;
              }
              Rng rng(ctx.opt.lift_seed * 2654435761u + std::hash<std::string>{}(name));
              int same = 0;
              for (int i = 0; i < 20; ++i) {
                QMatrix A = rng.next_mat(comm_dim(r0.module_dim), r0.module_dim);
                KnotResult r = knot_invariant(pd, A);
                if (r.form.gram == r0.form.gram) ++same;
              }
              c.computed = std::to_string(same) + "/20 identical";
              return same == 20;
            });
  }
}

QMatrix mcg_golden_gram() {
  QMatrix g(4, 4);
  Rational h(1, 2);
  Rational one(1);
  Rational grid[4][4] = {{one, h, -h, -one}, {h, one, h, -h}, {-h, h, one, h}, {-one, -h, h, one}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.at(i, j) = grid[i][j];
  return g;
}

void criterion_mcg(Recorder& rec, const Context& ctx) {
  const std::vector<int> word1 = {2, 3, -4, -5, 1};
  const std::vector<int> word2 = {2, 3, 3, 3, -4, -5, 1};
  Poly sq = P("1 - 2*t + 3*t^2 - 2*t^3 + t^4");

  rec.run(8, "mapping class modules", "both words have characteristic polynomial (1 - t + t^2)^2",
          [&](VerifyCase& c) {
            McgResult r1 = mcg_invariant(compose_twists(2, word1));
            McgResult r2 = mcg_invariant(compose_twists(2, word2));
            c.computed = poly_str(r1.char_poly) + " and " + poly_str(r2.char_poly);
            return r1.char_poly == sq && r2.char_poly == sq && r1.divisors == r2.divisors &&
                   r1.divisors == std::vector<Poly>{sq};
          });

  rec.run(8, "first word composite form",
          "x^2 + x*y - x*z - 2*x*w + y^2 + y*z - y*w + z^2 + z*w + w^2",
          [&](VerifyCase& c) {
            McgResult r1 = mcg_invariant(compose_twists(2, word1));
            c.computed = quadform_str(r1.sum_gram);
            return r1.sum_gram == mcg_golden_gram() && c.computed == c.expected &&
                   r1.zeta_fixed && r1.isometry_ok;
          });

  rec.run(8, "second word is three times the first",
          "composite grams equal 3x the first word's in the shared parametrization",
          [&](VerifyCase& c) {
            QVec v(4, Rational(0));
            v[0] = Rational(1, 3);
            McgResult r2 = mcg_invariant(compose_twists(2, word2), v);
            QMatrix golden = mcg_golden_gram();
            bool literal = r2.sum_gram == golden * Rational(3);
            McgResult r1 = mcg_invariant(compose_twists(2, word1));
            McgResult r2c = mcg_invariant(compose_twists(2, word2));
            FormWitness w = find_form_witness(QuadForm{4, {r2c.sum_gram}},
                                              QuadForm{4, {r1.sum_gram}},
                                              companion_matrix(r1.char_poly), false, 6);
            c.computed = std::string("3x: ") + (literal ? "exact" : "no");
            if (w.found) c.computed += "; " + witness_str(w);
            return literal && w.found && (w.c == 3 || w.c == Rational(1, 3));
          });

  rec.run(8, "scale 3 inequivalence", "scalar 3 is not a square times a unit norm",
          [&](VerifyCase& c) {
            Ternary t = scalar_square_test(Rational(3), sq);
            c.computed = t == Ternary::no    ? "square test: no; forms inequivalent"
                         : t == Ternary::yes ? "square test: yes"
                                             : "square test: unknown";
            return t == Ternary::no;
          });

  // Optional cross-check: the second word's mapping torus is the complement
  // of a known fibered knot. Supply its PD code under this table name to
  // enable the comparison.
  const std::string partner = "12n_582";
  if (!ctx.table || !ctx.table->has(partner)) {
    rec.skip(8, "fibered partner 12n_582", "divisors (1 - t + t^2)^2",
             "optional table entry absent");
  } else {
    rec.run(8, "fibered partner 12n_582", "divisors 1 - 2*t + 3*t^2 - 2*t^3 + t^4",
            [&](VerifyCase& c) {
              const KnotResult& r = ctx.knot(partner);
              c.computed = "divisors " + poly_list_str(r.divisors);
              McgResult r2 = mcg_invariant(compose_twists(2, word2));
              FormWitness w = find_form_witness(r.form, r2.form, companion_matrix(sq), true, 6);
              if (w.found)
                c.notes = "form vs second word: " + witness_str(w);
              else
                c.notes = "form vs second word: no low-height witness";
              return r.divisors == std::vector<Poly>{sq};
            });
  }
}

void criterion_properties(Recorder& rec, const Context& ctx) {
  uint64_t seed = ctx.opt.lift_seed * 40503u + 11;

  rec.run(9, "group axioms", "associativity, identity, inverses on random elements",
          [&](VerifyCase& c) {
            Rng rng(seed + 1);
            int m = 4;
            for (int it = 0; it < 20; ++it) {
              Nil2 a = nil2_make(rng.next_vec(m), rng.next_vec(comm_dim(m)));
              Nil2 b = nil2_make(rng.next_vec(m), rng.next_vec(comm_dim(m)));
              Nil2 d = nil2_make(rng.next_vec(m), rng.next_vec(comm_dim(m)));
              if (!(nil2_mul(nil2_mul(a, b), d) == nil2_mul(a, nil2_mul(b, d)))) return false;
              if (!(nil2_mul(a, nil2_inv(a)) == nil2_identity(m))) return false;
              if (!(nil2_mul(a, nil2_identity(m)) == a)) return false;
            }
            c.computed = "20 random triples";
            return true;
          });

  rec.run(9, "induced action identity",
          "E(x wedge y - y wedge x) = Tx wedge Ty - Ty wedge Tx on random input",
          [&](VerifyCase& c) {
            Rng rng(seed + 2);
            for (int it = 0; it < 10; ++it) {
              QMatrix T = rng.next_invertible(4);
              QMatrix E = lambda2_matrix(T);
              QVec x = rng.next_vec(4), y = rng.next_vec(4);
              QVec lhs = E.apply(qvec_sub(wedge(x, y), wedge(y, x)));
              QVec rhs = qvec_sub(wedge(T.apply(x), T.apply(y)), wedge(T.apply(y), T.apply(x)));
              if (!(lhs == rhs)) return false;
            }
            c.computed = "10 random matrices";
            return true;
          });

  rec.run(9, "symmetric quadratic correction",
          "per-coordinate B symmetric; lambda(x+y) - lambda(x) - lambda(y) = B(x,y)",
          [&](VerifyCase& c) {
            Rng rng(seed + 3);
            for (int it = 0; it < 6; ++it) {
              QMatrix T = rng.next_invertible(3);
              TauLift lift = build_tau_lift(T, rng.next_mat(comm_dim(3), 3));
              for (const auto& B : lift.B)
                if (!(B == B.transpose())) return false;
              QVec x = rng.next_vec(3), y = rng.next_vec(3);
              QVec lhs = qvec_sub(tau_lambda(lift, qvec_add(x, y)),
                                  qvec_add(tau_lambda(lift, x), tau_lambda(lift, y)));
              QVec rhs = qvec_zero(comm_dim(3));
              for (int k = 0; k < comm_dim(3); ++k) {
                QVec By = lift.B[static_cast<size_t>(k)].apply(y);
                Rational acc = 0;
                for (size_t i = 0; i < By.size(); ++i) acc += x[i] * By[i];
                rhs[static_cast<size_t>(k)] = acc;
              }
              if (!(lhs == rhs)) return false;
            }
            c.computed = "6 random lifts";
            return true;
          });

  rec.run(9, "lift homomorphism", "tau(ab) = tau(a) tau(b); inverse round trips",
          [&](VerifyCase& c) {
            Rng rng(seed + 4);
            for (int it = 0; it < 6; ++it) {
              QMatrix T = rng.next_invertible(3);
              TauLift lift = build_tau_lift(T, rng.next_mat(comm_dim(3), 3));
              Nil2 a = nil2_make(rng.next_vec(3), rng.next_vec(comm_dim(3)));
              Nil2 b = nil2_make(rng.next_vec(3), rng.next_vec(comm_dim(3)));
              if (!(tau_apply(lift, nil2_mul(a, b)) ==
                    nil2_mul(tau_apply(lift, a), tau_apply(lift, b))))
                return false;
              if (!(tau_apply(lift, tau_apply(lift, a, 1), -1) == a)) return false;
            }
            c.computed = "6 random lifts";
            return true;
          });

  rec.run(9, "longitude properties", "central value, homogeneous, isometric on every bundled knot",
          [&](VerifyCase& c) {
            int n = 0;
            for (const auto& [name, r] : ctx.knots) {
              if (r.degenerate) continue;
              if (!r.isometry_ok || !r.homogeneous_ok) {
                c.computed = name + ": isometry " + (r.isometry_ok ? "ok" : "broken") +
                             ", homogeneity " + (r.homogeneous_ok ? "ok" : "broken");
                return false;
              }
              ++n;
            }
            if (!ctx.knot_errors.empty() || !ctx.table_error.empty())
              throw std::runtime_error(ctx.table_error.empty()
                                           ? ctx.knot_errors.begin()->first + ": " +
                                                 ctx.knot_errors.begin()->second
                                           : ctx.table_error);
            c.computed = std::to_string(n) + " knots; central projection succeeded in each pipeline";
            return n > 0;
          });

  rec.run(9, "fox module assertions",
          "divisors reciprocal, nonzero at 1 and -1, product is the alexander polynomial",
          [&](VerifyCase& c) {
            int n = 0;
            for (const auto& [name, r] : ctx.knots) {
              Poly prod(Rational(1));
              for (const auto& d : r.divisors) {
                if (!reciprocal_check(d)) {
                  c.computed = name + ": non-reciprocal divisor " + poly_str(d);
                  return false;
                }
                if (d.eval(1) == 0 || d.eval(-1) == 0) {
                  c.computed = name + ": divisor vanishes at a unit: " + poly_str(d);
                  return false;
                }
                prod = prod * d;
              }
              if (!r.degenerate && !(monic_normalize(r.alexander) == prod)) {
                c.computed = name + ": divisor product differs from the alexander polynomial";
                return false;
              }
              Rational det1 = r.alexander.eval(1);
              if (!r.degenerate && !(det1 == 1 || det1 == -1)) {
                c.computed = name + ": determinant at 1 is " + det1.get_str();
                return false;
              }
              ++n;
            }
            if (!ctx.knot_errors.empty() || !ctx.table_error.empty())
              throw std::runtime_error(ctx.table_error.empty()
                                           ? ctx.knot_errors.begin()->first + ": " +
                                                 ctx.knot_errors.begin()->second
                                           : ctx.table_error);
            c.computed = std::to_string(n) + " knots checked";
            return n > 0;
          });
}

void criterion_unknot(Recorder& rec) {
  rec.run(10, "unknot", "empty divisors, zero-dimensional module, report renders",
          [&](VerifyCase& c) {
            KnotResult r = knot_invariant(braid_closure_pd({1, 2}, 3));
            std::string json = knot_report_json(r, "unknot", pd_str(braid_closure_pd({1, 2}, 3)));
            bool ok = r.divisors.empty() && r.module_dim == 0 && r.center.rank == 0 &&
                      r.degenerate && json.find("\"hk_dimension\": 0") != std::string::npos;
            c.computed = "divisors " + std::to_string(r.divisors.size()) + ", dimension " +
                         std::to_string(r.module_dim) + ", report " +
                         std::to_string(json.size()) + " bytes";
            return ok;
          });
}

void criterion_probe(Recorder& rec, const Context& ctx) {
  if (!ctx.table) {
    rec.run(11, "nondegeneracy probe", "per-coordinate determinants nonzero",
            [&](VerifyCase&) -> bool { throw std::runtime_error(ctx.table_error); });
    return;
  }
  for (const auto& [name, pd] : ctx.table->entries) {
    rec.run(11, name + " nondegeneracy probe", "per-coordinate determinants nonzero",
            [&, name](VerifyCase& c) {
              const KnotResult& r = ctx.knot(name);
              if (r.degenerate) {
                c.computed = "degenerate module, no coordinates";
                return true;
              }
              std::string dets;
              bool nonzero = true;
              for (size_t l = 0; l < r.gram_det.size(); ++l) {
                if (l) dets += ", ";
                dets += r.gram_det[l].get_str();
                nonzero = nonzero && r.gram_det[l] != 0;
              }
              c.computed = "det = " + dets;
              // A zero here is a counterexample candidate for the
              // nondegeneracy conjecture: report it loudly, do not fail the
              // build over it.
              if (!nonzero)
                c.notes = "CONJECTURE VIOLATION CANDIDATE: zero determinant; "
                          "worth reporting upstream";
              return true;
            });
  }
}

}  // namespace

VerifySummary run_verify(const VerifyOptions& opt) {
  Recorder rec;
  Context ctx(opt);

  criterion_trefoil(rec, ctx);
  criterion_degree2(rec, ctx);
  criterion_degree4(rec, ctx);
  criterion_pretzel(rec);
  criterion_center_lists(rec);
  criterion_rank_oracle(rec, ctx);
  criterion_lift_independence(rec, ctx);
  criterion_mcg(rec, ctx);
  criterion_properties(rec, ctx);
  criterion_unknot(rec);
  criterion_probe(rec, ctx);

  VerifySummary s;
  s.cases = std::move(rec.cases);
  for (const auto& c : s.cases) {
    if (c.status == "pass")
      ++s.passed;
    else if (c.status == "fail")
      ++s.failed;
    else
      ++s.skipped;
  }
  return s;
}

std::string verify_table(const VerifySummary& s) {
  size_t wname = 4;
  for (const auto& c : s.cases) wname = std::max(wname, c.name.size());
  std::ostringstream out;
  for (const auto& c : s.cases) {
    out << (c.status == "pass" ? "pass " : c.status == "fail" ? "FAIL " : "skip ");
    out << "[" << c.criterion << "] " << c.name;
    for (size_t i = c.name.size(); i < wname + 2; ++i) out << ' ';
    out << c.computed;
    if (!c.notes.empty()) out << "  (" << c.notes << ")";
    out << "\n";
    if (c.status == "fail") {
      out << "      expected: " << c.expected << "\n";
    }
  }
  out << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
  return out.str();
}

std::string verify_json(const VerifySummary& s) {
  nlohmann::json j;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["skipped"] = s.skipped;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : s.cases) {
    nlohmann::json r;
    r["criterion"] = c.criterion;
    r["name"] = c.name;
    r["expected"] = c.expected;
    r["computed"] = c.computed;
    r["status"] = c.status;
    r["notes"] = c.notes;
    rows.push_back(r);
  }
  j["cases"] = rows;
  return j.dump(2);
}

}  // namespace nilform
