#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "json.hpp"
#include "nilform/report.hpp"
#include "nilform/table.hpp"
#include "nilform/verify.hpp"

using namespace nilform;
using nlohmann::json;

namespace {

const KnotTable& table() {
  static KnotTable t = load_knot_table();
  return t;
}

}  // namespace

TEST_CASE("knot report JSON: content and round trip") {
  KnotResult r = knot_invariant(table().get("3_1"));
  std::string s = knot_report_json(r, "3_1", pd_str(table().get("3_1")));
  json j = json::parse(s);
  CHECK(j["name"] == "3_1");
  CHECK(j["hk_dimension"] == 2);
  CHECK(j["center_rank"] == 1);
  CHECK(j["basis_kind"] == "canonical");
  CHECK(j["divisors"][0] == "1 - t + t^2");
  CHECK(j["display"][0] == "x^2 - x*y + y^2");
  CHECK(j["grams"][0][0][1] == "1/2");
  CHECK(j["isometry_ok"] == true);
  CHECK(j["homogeneous_ok"] == true);
  CHECK(j["nondegenerate"][0] == true);
  // Keys are sorted and rationals are strings, so dumping the parse
  // reproduces the rendering byte for byte.
  CHECK(j.dump(2) == s);
}

TEST_CASE("degenerate knot report renders with a zero-dimensional form") {
  PDCode pd = braid_closure_pd({1, 2}, 3);
  KnotResult r = knot_invariant(pd);
  std::string s = knot_report_json(r, "", pd_str(pd));
  json j = json::parse(s);
  CHECK(!j.contains("name"));
  CHECK(j["hk_dimension"] == 0);
  CHECK(j["center_rank"] == 0);
  CHECK(j["divisors"].empty());
  CHECK(j["grams"].empty());
  CHECK(j.dump(2) == s);

  std::string text = knot_report_text(r, "", pd_str(pd));
  CHECK(text.find("hk dimension: 0") != std::string::npos);
}

TEST_CASE("mcg report JSON mirrors the knot report") {
  McgResult r = mcg_invariant(compose_twists(1, {1, 2}));
  std::string s = mcg_report_json(r, {1, 2});
  json j = json::parse(s);
  CHECK(j["genus"] == 1);
  CHECK(j["twists"] == json::array({1, 2}));
  CHECK(j["char_poly"] == "1 - t + t^2");
  CHECK(j["zeta_fixed"] == true);
  CHECK(j["hf_dimension"] == 2);
  CHECK(j["center_rank"] == 1);
  CHECK(j["display"][0] == "-x^2 - x*y - y^2");
  CHECK(j["nondegenerate"][0] == true);
  CHECK(j.dump(2) == s);
}

TEST_CASE("center report JSON round trips") {
  Poly f = poly_parse("1 - t + t^2 - t^3 + t^4");
  CenterReport rep = center_report_for_poly(f);
  std::string s = center_report_json(f, rep);
  json j = json::parse(s);
  CHECK(j["center_rank"] == 2);
  CHECK(j["formula_rank"] == 2);
  CHECK(j["basis"].size() == 2);
  CHECK(j.dump(2) == s);
}

TEST_CASE("verify JSON round trips") {
  VerifySummary s;
  VerifyCase c;
  c.criterion = 1;
  c.name = "sample";
  c.expected = "x";
  c.computed = "x";
  c.status = "pass";
  s.cases.push_back(c);
  s.passed = 1;
  std::string out = verify_json(s);
  json j = json::parse(out);
  CHECK(j["cases"][0]["name"] == "sample");
  CHECK(j["passed"] == 1);
  CHECK(j.dump(2) == out);
}

TEST_CASE("knot display normalization") {
  KnotResult r = knot_invariant(table().get("6_1"));
  REQUIRE(r.form.gram.size() == 1);
  CHECK(knot_display(r.form.gram[0]) == "2*x^2 - 5*x*y + 2*y^2");
}

TEST_CASE("knot table honors the environment variable") {
  // Highest-priority default source after an explicit --table argument.
  std::string path = "tmp_env_table.json";
  {
    std::ofstream out(path);
    out << "{\"zz_env_knot\": \"" << pd_str(table().get("3_1")) << "\"}";
  }
  setenv("NILFORM_TABLE", path.c_str(), 1);
  KnotTable t = load_knot_table();
  unsetenv("NILFORM_TABLE");
  std::remove(path.c_str());
  CHECK(t.has("zz_env_knot"));
  CHECK(!t.has("3_1"));
}
