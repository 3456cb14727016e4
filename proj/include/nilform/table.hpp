#pragma once

#include <map>
#include <string>

#include "nilform/pd.hpp"

namespace nilform {

// Bundled knot table: a JSON map from knot name to PD string.
struct KnotTable {
  std::map<std::string, PDCode> entries;

  bool has(const std::string& name) const { return entries.count(name) > 0; }
  const PDCode& get(const std::string& name) const;
};

// Loads the table from the first path that exists: the explicit argument,
// $NILFORM_TABLE, ./data/knots.json, ../data/knots.json.
// Throws std::runtime_error when no candidate is readable.
KnotTable load_knot_table(const std::string& explicit_path = "");

}  // namespace nilform
