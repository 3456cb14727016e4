#include "nilform/wirtinger.hpp"

#include <numeric>
#include <stdexcept>

namespace nilform {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<FreeWord> WirtingerData::relators() const {
  std::vector<FreeWord> rs;
  for (const auto& c : cross) {
    int j = c.over;
    FreeWord r = {c.sign > 0 ? j : -j, c.under_in, c.sign > 0 ? -j : j, -c.under_out};
    rs.push_back(fw_reduce(r));
  }
  return rs;
}

WirtingerData wirtinger_from_pd(const PDCode& pd) {
  DiagramData dd = analyze_pd(pd);
  int total = 2 * dd.n;

  // Arcs: edges merged where the strand passes over a crossing.
  UnionFind uf(total + 1);
  for (const auto& c : dd.cross) uf.unite(c.over_in, c.over_out);

  // Renumber arcs 1..A with the arc of edge 1 first, then by walk order.
  std::vector<int> arc_of(total + 1, 0);
  int next_arc = 0;
  for (int e = 1; e <= total; ++e) {
    int root = uf.find(e);
    if (arc_of[root] == 0) arc_of[root] = ++next_arc;
  }
  auto arc = [&](int e) { return arc_of[uf.find(e)]; };

  WirtingerData wd;
  wd.arcs = next_arc;
  wd.meridian = arc(1);
  wd.writhe = dd.writhe;
  wd.arc_of_edge.assign(static_cast<size_t>(total) + 1, 0);
  for (int e = 1; e <= total; ++e) wd.arc_of_edge[e] = arc(e);
  wd.probe_arc = wd.meridian;
  for (int e = 2; e <= total; ++e)
    if (arc(e) != wd.meridian) {
      wd.probe_arc = arc(e);
      break;
    }
  for (const auto& c : dd.cross) {
    WirtingerCrossing wc;
    wc.under_in = arc(c.under_in);
    wc.under_out = arc(c.under_out);
    wc.over = arc(c.over_in);
    wc.sign = c.sign;
    wd.cross.push_back(wc);
  }

  // Preferred longitude: read the over-arcs at successive underpasses along
  // the knot starting from edge 1, then cancel the total linking with a
  // meridian power so the word is null-homologous. The letter exponents
  // are fixed by requiring the longitude to commute with the meridian,
  // which forces its module class to vanish.
  FreeWord l;
  for (int e = 1; e <= total; ++e)
    for (const auto& c : dd.cross)
      if (c.under_in == e) l.push_back(c.sign > 0 ? -arc(c.over_in) : arc(c.over_in));
  for (int k = 0; k < (dd.writhe > 0 ? dd.writhe : -dd.writhe); ++k)
    l.push_back(dd.writhe > 0 ? wd.meridian : -wd.meridian);
  wd.longitude = fw_reduce(l);
  return wd;
}

}  // namespace nilform
