#pragma once

#include <array>
#include <string>
#include <vector>

namespace nilform {

// Planar diagram code of an oriented knot. Each crossing lists its four
// edge labels counterclockwise starting from the incoming under-strand
// edge; edges are numbered 1..2n consecutively along the orientation.
struct PDCode {
  std::vector<std::array<int, 4>> x;

  int crossings() const { return static_cast<int>(x.size()); }
  int edges() const { return 2 * crossings(); }
  bool operator==(const PDCode& o) const { return x == o.x; }
};

// Accepts "X(1,4,2,5) X(3,6,4,1) ..." with optional PD[...] wrapper and
// arbitrary separators between crossings.
PDCode parse_pd(const std::string& text);
std::string pd_str(const PDCode& pd);

// Mirror image: swaps the over-strand slots at every crossing.
PDCode pd_mirror(const PDCode& pd);

// Per-crossing data after orienting the diagram.
struct CrossingInfo {
  int under_in = 0, under_out = 0;  // edges
  int over_in = 0, over_out = 0;
  int sign = 0;
};

struct DiagramData {
  int n = 0;
  std::vector<CrossingInfo> cross;
  int writhe = 0;
};

// Validates the code and resolves over-strand directions and signs.
// Throws std::invalid_argument on malformed input.
DiagramData analyze_pd(const PDCode& pd);

// Diagram generators. All return consecutively labeled codes.
PDCode torus_pd(int k);                                       // (2,k) torus knot, odd k >= 3
PDCode pretzel_pd(int p, int q, int r);                       // three vertical twist tangles
PDCode braid_closure_pd(const std::vector<int>& word, int strands);

}  // namespace nilform
