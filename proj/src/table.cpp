#include "nilform/table.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace nilform {

const PDCode& KnotTable::get(const std::string& name) const {
  auto it = entries.find(name);
  if (it == entries.end()) throw std::runtime_error("knot not in table: " + name);
  return it->second;
}

KnotTable load_knot_table(const std::string& explicit_path) {
  std::vector<std::string> candidates;
  if (!explicit_path.empty()) candidates.push_back(explicit_path);
  if (const char* env = std::getenv("NILFORM_TABLE")) {
    if (*env) candidates.push_back(env);
  }
  if (explicit_path.empty()) {
    candidates.push_back("data/knots.json");
    candidates.push_back("../data/knots.json");
  }
  for (const auto& path : candidates) {
    std::ifstream in(path);
    if (!in) {
      if (path == explicit_path) throw std::runtime_error("cannot open knot table: " + path);
      continue;
    }
    nlohmann::json j;
    in >> j;
    if (!j.is_object()) throw std::runtime_error("knot table must be a JSON object: " + path);
    KnotTable table;
    for (auto& [name, pd] : j.items()) {
      if (!pd.is_string()) throw std::runtime_error("knot table entry is not a PD string: " + name);
      table.entries[name] = parse_pd(pd.get<std::string>());
    }
    return table;
  }
  throw std::runtime_error("no knot table found (tried --table, NILFORM_TABLE, data/knots.json)");
}

}  // namespace nilform
