#pragma once

#include <string>
#include <vector>

#include "nilform/freegroup.hpp"
#include "nilform/pd.hpp"

namespace nilform {

// One crossing, written in terms of arc generators (1-based indices).
struct WirtingerCrossing {
  int under_in = 0, under_out = 0, over = 0;
  int sign = 0;
};

// Wirtinger presentation of the knot group, one generator per arc and one
// relator per crossing, plus the preferred longitude word.
struct WirtingerData {
  int arcs = 0;
  int meridian = 1;   // arc containing edge 1 (always renumbered to 1)
  int probe_arc = 1;  // first arc met after the meridian along the knot
  std::vector<int> arc_of_edge;  // 1-based edge index to arc index
  std::vector<WirtingerCrossing> cross;
  int writhe = 0;
  // Relator: under_out = conj(over, sign) applied to under_in, i.e.
  // g_out = g_over^sign g_in g_over^-sign as a word in arc generators.
  std::vector<FreeWord> relators() const;
  // Null-homologous longitude as a word in arc generators.
  FreeWord longitude;
};

WirtingerData wirtinger_from_pd(const PDCode& pd);

}  // namespace nilform
