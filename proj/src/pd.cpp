#include "nilform/pd.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nilform {

namespace {

int wrap_edge(int x, int total) { return (x - 1) % total + 1; }

// Four-valent plane graph builder shared by the diagram generators.
//
// Each crossing has four ports stored in counterclockwise order
// 0=upper-left, 1=lower-left, 2=lower-right, 3=upper-right, so a strand
// entering at port p leaves at port (p+2)%4. over_diag selects which
// diagonal carries the over strand: 0 for ports {0,2}, 1 for ports {1,3}.
class DiagramBuilder {
 public:
  int add_crossing(int over_diag) {
    over_.push_back(over_diag);
    ports_.push_back({-1, -1, -1, -1});
    return static_cast<int>(over_.size()) - 1;
  }

  void connect(int c1, int p1, int c2, int p2) {
    if (ports_[c1][p1] != -1 || ports_[c2][p2] != -1)
      throw std::logic_error("diagram port connected twice");
    int w = static_cast<int>(wires_.size());
    wires_.push_back({{c1, p1}, {c2, p2}});
    ports_[c1][p1] = w;
    ports_[c2][p2] = w;
  }

  // Orients the knot by walking the strand, labels edges 1..2n in walk
  // order, and emits one X(a,b,c,d) tuple per crossing with a at the
  // incoming under-strand port.
  PDCode emit() const {
    int n = static_cast<int>(over_.size());
    if (n == 0) throw std::invalid_argument("diagram has no crossings");
    for (int c = 0; c < n; ++c)
      for (int p = 0; p < 4; ++p)
        if (ports_[c][p] == -1) throw std::logic_error("diagram port left open");

    // Walk: arrive at (c,p), leave at (c,(p+2)%4) along the next wire.
    std::vector<int> label(wires_.size(), 0);
    std::vector<std::array<bool, 4>> arrived(n, {false, false, false, false});
    int c = 0, p = 0;
    int next_label = 1;
    int start_wire = ports_[0][0];
    do {
      int w = ports_[c][p];
      if (label[w] != 0) throw std::invalid_argument("diagram is a link, not a knot");
      label[w] = next_label++;
      arrived[c][p] = true;
      int q = (p + 2) % 4;
      int wn = ports_[c][q];
      auto [e1, e2] = wires_[wn];
      if (e1.first == c && e1.second == q) {
        c = e2.first;
        p = e2.second;
      } else {
        c = e1.first;
        p = e1.second;
      }
    } while (ports_[c][p] != start_wire || label[start_wire] == 0);
    for (int w = 0; w < static_cast<int>(wires_.size()); ++w)
      if (label[w] == 0) throw std::invalid_argument("diagram is a link, not a knot");

    PDCode pd;
    for (int i = 0; i < n; ++i) {
      int under_in = -1;
      for (int q = 0; q < 4; ++q) {
        bool on_over = (q % 2 == over_[i]);
        if (!on_over && arrived[i][q]) under_in = q;
      }
      if (under_in == -1) throw std::logic_error("crossing missing under-strand arrival");
      std::array<int, 4> t{};
      for (int k = 0; k < 4; ++k) t[k] = label[ports_[i][(under_in + k) % 4]];
      pd.x.push_back(t);
    }
    return pd;
  }

 private:
  std::vector<int> over_;
  std::vector<std::array<int, 4>> ports_;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> wires_;
};

}  // namespace

PDCode parse_pd(const std::string& text) {
  PDCode pd;
  size_t i = 0;
  auto read_int = [&](int& out) -> bool {
    while (i < text.size() && !std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (text[i] == 'X' || text[i] == 'x') return false;
      ++i;
    }
    if (i >= text.size()) return false;
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    out = v;
    return true;
  };
  while (i < text.size()) {
    if (text[i] == 'X' || text[i] == 'x') {
      ++i;
      std::array<int, 4> t{};
      for (int k = 0; k < 4; ++k)
        if (!read_int(t[k])) throw std::invalid_argument("malformed PD code: expected four labels after X");
      pd.x.push_back(t);
    } else {
      ++i;
    }
  }
  if (pd.x.empty()) throw std::invalid_argument("malformed PD code: no crossings found");
  return pd;
}

std::string pd_str(const PDCode& pd) {
  std::ostringstream os;
  for (size_t i = 0; i < pd.x.size(); ++i) {
    if (i) os << ' ';
    os << 'X' << '(' << pd.x[i][0] << ',' << pd.x[i][1] << ',' << pd.x[i][2] << ',' << pd.x[i][3] << ')';
  }
  return os.str();
}

PDCode pd_mirror(const PDCode& pd) {
  PDCode m = pd;
  for (auto& t : m.x) std::swap(t[1], t[3]);
  return m;
}

DiagramData analyze_pd(const PDCode& pd) {
  DiagramData dd;
  dd.n = pd.crossings();
  int total = 2 * dd.n;
  std::map<int, int> count;
  for (const auto& t : pd.x)
    for (int k = 0; k < 4; ++k) {
      if (t[k] < 1 || t[k] > total)
        throw std::invalid_argument("PD edge label out of range 1..2n");
      count[t[k]]++;
    }
  for (int e = 1; e <= total; ++e)
    if (count[e] != 2) throw std::invalid_argument("each PD edge label must appear exactly twice");

  for (const auto& t : pd.x) {
    CrossingInfo ci;
    int a = t[0], b = t[1], c = t[2], d = t[3];
    if (c != wrap_edge(a + 1, total))
      throw std::invalid_argument("PD under-strand labels not consecutive");
    ci.under_in = a;
    ci.under_out = c;
    bool pos = (b == wrap_edge(d + 1, total));
    bool neg = (d == wrap_edge(b + 1, total));
    if (pos && neg) throw std::invalid_argument("PD crossing orientation ambiguous");
    if (!pos && !neg) throw std::invalid_argument("PD over-strand labels not consecutive");
    if (pos) {
      ci.sign = 1;
      ci.over_in = d;
      ci.over_out = b;
    } else {
      ci.sign = -1;
      ci.over_in = b;
      ci.over_out = d;
    }
    dd.writhe += ci.sign;
    dd.cross.push_back(ci);
  }
  return dd;
}

PDCode braid_closure_pd(const std::vector<int>& word, int strands) {
  if (strands < 2) throw std::invalid_argument("braid needs at least two strands");
  if (word.empty()) throw std::invalid_argument("braid word is empty");
  DiagramBuilder b;
  // dangling[p]: open lower port of strand position p; first_top[p]: the
  // first upper port consumed at position p, closed up at the end.
  std::vector<std::pair<int, int>> dangling(strands, {-1, -1});
  std::vector<std::pair<int, int>> first_top(strands, {-1, -1});
  for (int letter : word) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= strands) throw std::invalid_argument("braid letter out of range");
    int c = b.add_crossing(letter > 0 ? 1 : 0);
    int lpos = i - 1, rpos = i;
    auto feed = [&](int pos, int upper_port) {
      if (dangling[pos].first == -1)
        first_top[pos] = {c, upper_port};
      else
        b.connect(dangling[pos].first, dangling[pos].second, c, upper_port);
    };
    feed(lpos, 0);
    feed(rpos, 3);
    dangling[lpos] = {c, 1};
    dangling[rpos] = {c, 2};
  }
  for (int p = 0; p < strands; ++p) {
    if (first_top[p].first == -1)
      throw std::invalid_argument("braid strand untouched by any crossing");
    b.connect(dangling[p].first, dangling[p].second, first_top[p].first, first_top[p].second);
  }
  return b.emit();
}

PDCode torus_pd(int k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("torus generator expects odd k >= 3");
  std::vector<int> word(static_cast<size_t>(k), 1);
  return braid_closure_pd(word, 2);
}

PDCode pretzel_pd(int p, int q, int r) {
  int twists[3] = {p, q, r};
  for (int v : twists)
    if (v == 0) throw std::invalid_argument("pretzel twist counts must be nonzero");
  DiagramBuilder b;
  // Per tangle: top-left, top-right, bottom-left, bottom-right posts.
  std::pair<int, int> tl[3], tr[3], bl[3], br[3];
  for (int t = 0; t < 3; ++t) {
    int m = twists[t] > 0 ? twists[t] : -twists[t];
    int diag = twists[t] > 0 ? 1 : 0;
    int first = -1, last = -1;
    for (int j = 0; j < m; ++j) {
      int c = b.add_crossing(diag);
      if (j == 0)
        first = c;
      else {
        b.connect(last, 1, c, 0);
        b.connect(last, 2, c, 3);
      }
      last = c;
    }
    tl[t] = {first, 0};
    tr[t] = {first, 3};
    bl[t] = {last, 1};
    br[t] = {last, 2};
  }
  for (int t = 0; t < 2; ++t) {
    b.connect(tr[t].first, tr[t].second, tl[t + 1].first, tl[t + 1].second);
    b.connect(br[t].first, br[t].second, bl[t + 1].first, bl[t + 1].second);
  }
  // Outer closure arcs over the top and under the bottom.
  b.connect(tl[0].first, tl[0].second, tr[2].first, tr[2].second);
  b.connect(bl[0].first, bl[0].second, br[2].first, br[2].second);
  // The builder's crossing orientation yields the mirror of the usual
  // pretzel convention; reflect so positive counts are right-handed twists,
  // matching the documented (3,3,-3) form values.
  return pd_mirror(b.emit());
}

}  // namespace nilform
