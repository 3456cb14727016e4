#pragma once

#include <string>
#include <vector>

#include "nilform/knot.hpp"
#include "nilform/mcg.hpp"

namespace nilform {

// Display normalization used for knot forms: alternating power basis of the
// module, scaled to primitive integer coefficients.
std::string knot_display(const QMatrix& gram);

// JSON renderings. Rationals appear as "p/q" strings, keys are sorted, and
// array orders follow the fixed basis order, so output is diffable.
std::string knot_report_json(const KnotResult& r, const std::string& name,
                             const std::string& pd);
std::string mcg_report_json(const McgResult& r, const std::vector<int>& twists);
std::string center_report_json(const Poly& f, const CenterReport& rep);

// Line-oriented renderings of the same data for the terminal.
std::string knot_report_text(const KnotResult& r, const std::string& name,
                             const std::string& pd);
std::string mcg_report_text(const McgResult& r, const std::vector<int>& twists);
std::string center_report_text(const Poly& f, const CenterReport& rep);

}  // namespace nilform
