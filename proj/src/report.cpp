#include "nilform/report.hpp"

#include <sstream>

#include "json.hpp"

namespace nilform {

namespace {

using nlohmann::json;

json gram_json(const QMatrix& g) {
  json rows = json::array();
  for (int i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.cols(); ++j) row.push_back(g.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

json grams_json(const std::vector<QMatrix>& grams) {
  json a = json::array();
  for (const auto& g : grams) a.push_back(gram_json(g));
  return a;
}

json poly_list_json(const std::vector<Poly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(poly_str(p));
  return a;
}

json nondegenerate_json(const std::vector<Rational>& dets) {
  json a = json::array();
  for (const auto& d : dets) a.push_back(d != 0);
  return a;
}

json basis_json(const std::vector<QVec>& basis) {
  json a = json::array();
  for (const auto& v : basis) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.get_str());
    a.push_back(row);
  }
  return a;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void text_common_form(std::ostringstream& out, const std::vector<std::string>& displays,
                      const std::vector<Rational>& dets) {
  for (size_t l = 0; l < displays.size(); ++l)
    out << "display[" << l << "]: " << displays[l] << "\n";
  for (size_t l = 0; l < dets.size(); ++l)
    out << "nondegenerate[" << l << "]: " << yesno(dets[l] != 0) << "\n";
}

std::vector<std::string> knot_displays(const KnotResult& r) {
  std::vector<std::string> out;
  for (const auto& g : r.form.gram) out.push_back(knot_display(g));
  return out;
}

std::vector<std::string> mcg_displays(const McgResult& r) {
  std::vector<std::string> out;
  for (const auto& g : r.form.gram) out.push_back(quadform_str(g));
  return out;
}

}  // namespace

std::string knot_display(const QMatrix& gram) {
  return quadform_str(primitive_gram(alternate_basis(gram)));
}

std::string knot_report_json(const KnotResult& r, const std::string& name,
                             const std::string& pd) {
  json j;
  if (!name.empty()) j["name"] = name;
  j["pd"] = pd;
  j["divisors"] = poly_list_json(r.divisors);
  j["hk_dimension"] = r.module_dim;
  j["center_rank"] = r.center.rank;
  j["basis_kind"] = r.center.basis_kind;
  j["grams"] = grams_json(r.form.gram);
  json disp = json::array();
  for (const auto& s : knot_displays(r)) disp.push_back(s);
  j["display"] = disp;
  j["isometry_ok"] = r.isometry_ok;
  j["homogeneous_ok"] = r.homogeneous_ok;
  j["nondegenerate"] = nondegenerate_json(r.gram_det);
  return j.dump(2);
}

std::string mcg_report_json(const McgResult& r, const std::vector<int>& twists) {
  json j;
  j["genus"] = r.genus;
  j["twists"] = twists;
  j["divisors"] = poly_list_json(r.divisors);
  j["char_poly"] = poly_str(r.char_poly);
  j["zeta_fixed"] = r.zeta_fixed;
  j["hf_dimension"] = r.hf_dimension;
  j["center_rank"] = r.center.rank;
  j["basis_kind"] = r.center.basis_kind;
  j["grams"] = grams_json(r.form.gram);
  json disp = json::array();
  for (const auto& s : mcg_displays(r)) disp.push_back(s);
  j["display"] = disp;
  j["isometry_ok"] = r.isometry_ok;
  j["nondegenerate"] = nondegenerate_json(r.gram_det);
  return j.dump(2);
}

std::string center_report_json(const Poly& f, const CenterReport& rep) {
  json j;
  j["poly"] = poly_str(f);
  j["center_rank"] = rep.rank;
  j["basis_kind"] = rep.basis_kind;
  if (rep.formula_rank)
    j["formula_rank"] = *rep.formula_rank;
  else
    j["formula_rank"] = nullptr;
  j["basis"] = basis_json(rep.basis);
  j["notes"] = rep.notes;
  return j.dump(2);
}

std::string knot_report_text(const KnotResult& r, const std::string& name,
                             const std::string& pd) {
  std::ostringstream out;
  if (!name.empty()) out << "name: " << name << "\n";
  out << "pd: " << pd << "\n";
  out << "alexander: " << poly_str(r.alexander) << "\n";
  out << "divisors:";
  for (const auto& d : r.divisors) out << " " << poly_str(d) << ";";
  out << "\n";
  out << "hk dimension: " << r.module_dim << "\n";
  out << "center rank: " << r.center.rank;
  if (!r.center.basis_kind.empty()) out << " (" << r.center.basis_kind << ")";
  out << "\n";
  text_common_form(out, knot_displays(r), r.gram_det);
  out << "isometry: " << yesno(r.isometry_ok) << "\n";
  out << "homogeneity: " << yesno(r.homogeneous_ok) << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string mcg_report_text(const McgResult& r, const std::vector<int>& twists) {
  std::ostringstream out;
  out << "genus: " << r.genus << "\n";
  out << "twists:";
  for (int t : twists) out << " " << t;
  out << "\n";
  out << "char poly: " << poly_str(r.char_poly) << "\n";
  out << "divisors:";
  for (const auto& d : r.divisors) out << " " << poly_str(d) << ";";
  out << "\n";
  out << "zeta fixed: " << yesno(r.zeta_fixed) << "\n";
  out << "hf dimension: " << r.hf_dimension << "\n";
  out << "center rank: " << r.center.rank;
  if (!r.center.basis_kind.empty()) out << " (" << r.center.basis_kind << ")";
  out << "\n";
  text_common_form(out, mcg_displays(r), r.gram_det);
  if (r.center.rank > 0) out << "composite: " << quadform_str(r.sum_gram) << "\n";
  out << "isometry: " << yesno(r.isometry_ok) << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string center_report_text(const Poly& f, const CenterReport& rep) {
  std::ostringstream out;
  out << "polynomial: " << poly_str(f) << "\n";
  out << "center rank: " << rep.rank;
  if (!rep.basis_kind.empty()) out << " (" << rep.basis_kind << ")";
  out << "\n";
  if (rep.formula_rank)
    out << "formula rank: " << *rep.formula_rank << "\n";
  else
    out << "formula rank: unavailable\n";
  for (size_t i = 0; i < rep.basis.size(); ++i) {
    out << "basis[" << i << "]:";
    for (const auto& x : rep.basis[i]) out << " " << x.get_str();
    out << "\n";
  }
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace nilform
