#include "lf/weave.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace lf {

std::vector<int> StringDiagram::closed_indices() const {
  std::vector<int> out;
  for (size_t s = 0; s < strings.size(); ++s)
    if (strings[s].closed()) out.push_back(static_cast<int>(s));
  return out;
}

std::vector<int> StringDiagram::frozen_indices() const {
  std::vector<int> out;
  for (size_t s = 0; s < strings.size(); ++s)
    if (!strings[s].closed()) out.push_back(static_cast<int>(s));
  return out;
}

StringDiagram string_diagram(const BraidWord& beta) {
  StringDiagram d;
  d.n = beta.n;
  d.length = beta.length();
  for (int t = 1; t <= beta.length(); ++t) {
    int a = beta.letters[t - 1], end = 0;
    for (int u = t + 1; u <= beta.length(); ++u)
      if (beta.letters[u - 1] == a) {
        end = u;
        break;
      }
    d.strings.push_back({a, t, end});
  }
  return d;
}

int string_pairing(const StringSeg& a, const StringSeg& b) {
  const int inf = 1 << 29;
  int la = a.start, ra = a.end ? a.end : inf;
  int lb = b.start, rb = b.end ? b.end : inf;
  if (a.level == b.level) {
    if (ra == lb) return -1;
    if (rb == la) return 1;
    return 0;
  }
  if (std::abs(a.level - b.level) != 1) return 0;
  if (a.level < b.level) return int(la < lb && lb < ra) - int(la < rb && rb < ra);
  return -(int(lb < la && la < rb) - int(lb < ra && ra < rb));
}

// ---------------------------------------------------------------- blueprint

int WeaveBlueprint::trivalent_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](auto& v) { return v.kind == WeaveVertex::Trivalent; }));
}
int WeaveBlueprint::hexavalent_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](auto& v) { return v.kind == WeaveVertex::Hexavalent; }));
}
int WeaveBlueprint::tetravalent_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](auto& v) { return v.kind == WeaveVertex::Tetravalent; }));
}

int WeaveBlueprint::edges_across_slice(int j) const {
  double x = j;
  int c = 0;
  for (auto& e : edges) {
    double xa = vertices[e.a].x, xb = vertices[e.b].x;
    if (std::min(xa, xb) < x && x < std::max(xa, xb)) ++c;
  }
  return c;
}

WeaveBlueprint compile_fence_weave(const BraidWord& beta) { return compile_fence_weave(fence_from_braid(beta)); }

WeaveBlueprint compile_fence_weave(const PlabicFence& f) {
  WeaveBlueprint w;
  w.n = f.n;
  w.beta.n = f.n;
  w.beta.letters.assign(f.length, 0);
  for (int i = 0; i + 1 < f.n; ++i)
    for (int t : f.levels[i]) w.beta.letters[t - 1] = i + 1;
  w.slice = half_twist_word(f.n);
  w.strings = string_diagram(w.beta);
  int rows = static_cast<int>(w.slice.size());
  std::map<int, std::vector<BraidMove>> paths;
  auto add_vertex = [&](WeaveVertex v) {
    w.vertices.push_back(v);
    return static_cast<int>(w.vertices.size()) - 1;
  };
  std::vector<int> source(rows);
  for (int p = 0; p < rows; ++p) source[p] = add_vertex({WeaveVertex::BoundaryPoint, 0, w.slice[p], -0.5, double(p)});
  std::vector<int> word = w.slice;
  for (int t = 1; t <= f.length; ++t) {
    int lv = w.beta.letters[t - 1];
    if (!paths.count(lv)) paths[lv] = path_to_top(f.n, lv);
    BlockSpec b{lv, paths[lv]};
    for (auto& mv : b.to_top) (mv.kind == 'b' ? b.hexavalent : b.tetravalent) += 2;
    int events = 2 * static_cast<int>(b.to_top.size()) + 1, e = 0;
    auto xpos = [&] { return (t - 1) + (++e) / double(events + 1); };
    auto run = [&](BraidMove mv) {
      double x = xpos();
      int p = mv.pos;
      if (mv.kind == 'b') {
        int h = add_vertex({WeaveVertex::Hexavalent, t, std::min(word[p], word[p + 1]), x, p + 1.0});
        for (int r = p; r < p + 3; ++r) w.edges.push_back({source[r], h, word[r]}), source[r] = h;
      } else {
        int h = add_vertex({WeaveVertex::Tetravalent, t, std::min(word[p], word[p + 1]), x, p + 0.5});
        for (int r = p; r < p + 2; ++r) w.edges.push_back({source[r], h, word[r]}), source[r] = h;
      }
      word = apply_move(word, mv);
    };
    for (auto& mv : b.to_top) run(mv);
    if (word[0] != lv) throw std::logic_error("block template did not bring the letter to the top");
    double x = xpos();
    int tri = add_vertex({WeaveVertex::Trivalent, t, lv, x, 0.0});
    int leg = add_vertex({WeaveVertex::BoundaryPoint, t, lv, x, -1.0});
    w.edges.push_back({source[0], tri, lv});
    w.edges.push_back({tri, leg, lv});
    source[0] = tri;
    for (auto it = b.to_top.rbegin(); it != b.to_top.rend(); ++it) run(*it);
    if (word != w.slice) throw std::logic_error("block template did not restore the slice");
    w.blocks.push_back(std::move(b));
  }
  for (int p = 0; p < rows; ++p) {
    int r = add_vertex({WeaveVertex::BoundaryPoint, 0, word[p], f.length + 0.5, double(p)});
    w.edges.push_back({source[p], r, word[p]});
  }
  return w;
}

// ---------------------------------------------------------------- cycles

CycleBasis cycle_basis(const WeaveBlueprint& w) {
  CycleBasis cb;
  auto& sd = w.strings;
  for (size_t s = 0; s < sd.strings.size(); ++s) {
    auto& st = sd.strings[s];
    if (st.closed()) {
      Cycle c;
      c.kind = Cycle::LongI;
      c.level = st.level;
      c.from = st.start;
      c.to = st.end;
      c.string = static_cast<int>(s);
      cb.closed.push_back(c);
    }
    Cycle r;
    r.kind = Cycle::Relative;
    r.level = st.level;
    r.string = static_cast<int>(s);
    r.slice = sd.first_slice(static_cast<int>(s));
    r.depth = st.level;
    cb.relative.push_back(r);
  }
  return cb;
}

std::vector<std::vector<int>> intersection_matrix(const WeaveBlueprint& w) {
  auto& s = w.strings.strings;
  std::vector<std::vector<int>> e(s.size(), std::vector<int>(s.size()));
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = 0; b < s.size(); ++b) e[a][b] = string_pairing(s[a], s[b]);
  return e;
}

int relative_pairing(const WeaveBlueprint& w, int slice, int depth, int c) {
  auto& sc = w.strings.strings[c];
  if (!sc.closed() || slice < sc.start || slice >= sc.end) return 0;
  // The long cycle of level i crosses the slice on sheets i (+1) and i+1 (-1).
  int total = 0;
  for (int r = 1; r <= depth; ++r) total += int(r == sc.level) - int(r == sc.level + 1);
  return total;
}

std::vector<std::vector<int>> relative_pairing_matrix(const WeaveBlueprint& w) {
  auto closed = w.strings.closed_indices();
  auto& s = w.strings.strings;
  std::vector<std::vector<int>> p(s.size(), std::vector<int>(closed.size()));
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t c = 0; c < closed.size(); ++c)
      p[a][c] = relative_pairing(w, w.strings.first_slice(static_cast<int>(a)), s[a].level, closed[c]);
  return p;
}

DualityReport duality_report(const WeaveBlueprint& w) {
  DualityReport rep;
  auto closed = w.strings.closed_indices();
  auto& s = w.strings.strings;
  auto eps = intersection_matrix(w);
  auto pm = relative_pairing_matrix(w);
  rep.identity = true;
  for (size_t a = 0; a < closed.size(); ++a)
    for (size_t c = 0; c < closed.size(); ++c)
      if (pm[closed[a]][c] != int(a == c)) rep.identity = false;
  rep.slice_independent = true;
  for (size_t a = 0; a < s.size(); ++a)
    for (int j = w.strings.first_slice(static_cast<int>(a)); j <= w.strings.last_slice(static_cast<int>(a)); ++j)
      for (size_t c = 0; c < closed.size(); ++c)
        if (relative_pairing(w, j, s[a].level, closed[c]) != pm[a][c]) rep.slice_independent = false;
  rep.skew = true;
  for (int a : closed)
    for (int b : closed)
      if (eps[a][b] != -eps[b][a]) rep.skew = false;
  rep.chain_identity = true;
  for (int a : closed)
    for (size_t d = 0; d < closed.size(); ++d) {
      long sum = 0;
      for (size_t c = 0; c < s.size(); ++c) sum += long(eps[a][c]) * pm[c][d];
      if (sum != eps[a][closed[d]]) rep.chain_identity = false;
    }
  return rep;
}

BoundaryWord boundary_word(const WeaveBlueprint& w) {
  BoundaryWord bw;
  std::vector<std::pair<double, int>> legs, left, right;
  for (auto& v : w.vertices) {
    if (v.kind != WeaveVertex::BoundaryPoint) continue;
    if (v.y < -0.5)
      legs.push_back({v.x, v.color});
    else if (v.x < 0)
      left.push_back({v.y, v.color});
    else
      right.push_back({v.y, v.color});
  }
  std::sort(legs.begin(), legs.end());
  std::sort(right.begin(), right.end());
  std::sort(left.rbegin(), left.rend());
  std::vector<int> rword, lword;
  for (auto& [x, c] : legs) bw.word.push_back(c);
  for (auto& [y, c] : right) bw.word.push_back(c), rword.push_back(c);
  for (auto& [y, c] : left) bw.word.push_back(c), lword.push_back(c);
  bool prefix = static_cast<int>(legs.size()) == w.beta.length();
  for (size_t i = 0; prefix && i < legs.size(); ++i) prefix = legs[i].second == w.beta.letters[i];
  bw.matches = prefix && is_longest_reduced(w.n, rword) && is_longest_reduced(w.n, lword);
  return bw;
}

// ---------------------------------------------------------------- triangulations

void validate_triangulation(const Triangulation& t) {
  int m = t.m;
  if (m < 3 || static_cast<int>(t.triangles.size()) != m - 2) throw std::invalid_argument("a triangulation of an m-gon has m-2 triangles");
  std::map<std::pair<int, int>, int> uses;
  for (auto tri : t.triangles) {
    std::sort(tri.begin(), tri.end());
    if (tri[0] < 0 || tri[2] >= m || tri[0] == tri[1] || tri[1] == tri[2]) throw std::invalid_argument("bad triangle");
    uses[{tri[0], tri[1]}]++;
    uses[{tri[1], tri[2]}]++;
    uses[{tri[0], tri[2]}]++;
  }
  std::vector<std::pair<int, int>> diagonals;
  for (auto& [e, k] : uses) {
    bool side = e.second - e.first == 1 || (e.first == 0 && e.second == m - 1);
    if (side && k != 1) throw std::invalid_argument("polygon side not in exactly one triangle");
    if (!side) {
      if (k != 2) throw std::invalid_argument("diagonal not in exactly two triangles");
      diagonals.push_back(e);
    }
  }
  for (auto& [a, b] : diagonals)
    for (auto& [c, d] : diagonals)
      if (a < c && c < b && b < d) throw std::invalid_argument("crossing diagonals");
  if (static_cast<int>(uses.size()) != 2 * m - 3) throw std::invalid_argument("not a triangulation");
}

Triangulation fan_triangulation(int m) {
  Triangulation t{m, {}};
  for (int j = 1; j + 1 < m; ++j) t.triangles.push_back({0, j, j + 1});
  return t;
}

Triangulation zigzag_triangulation(int m) {
  Triangulation t{m, {}};
  // strip between the chains 0,1,2,... and m-1,m-2,...
  int lo = 1, hi = m - 1, a = 0, b = m - 1;
  bool up = true;
  while (static_cast<int>(t.triangles.size()) < m - 2) {
    if (up) {
      t.triangles.push_back({a, lo, b});
      a = lo++;
    } else {
      t.triangles.push_back({a, b, hi - 1});
      b = --hi;
    }
    up = !up;
  }
  return t;
}

bool TriangulationWeave::is_path() const {
  if (trivalent <= 1) return edges.empty();
  if (static_cast<int>(edges.size()) != trivalent - 1) return false;
  std::vector<int> deg(trivalent);
  for (auto& [a, b] : edges) deg[a]++, deg[b]++;
  int ends = 0;
  for (int d : deg) {
    if (d > 2 || d == 0) return false;
    ends += d == 1;
  }
  return ends == 2;
}

TriangulationWeave triangulation_weave(const Triangulation& t) {
  validate_triangulation(t);
  TriangulationWeave tw;
  tw.trivalent = static_cast<int>(t.triangles.size());
  tw.legs = t.m;
  auto has = [](const std::array<int, 3>& tri, int v) { return std::find(tri.begin(), tri.end(), v) != tri.end(); };
  for (int i = 0; i < tw.trivalent; ++i)
    for (int j = i + 1; j < tw.trivalent; ++j) {
      int shared = 0;
      for (int v : t.triangles[i]) shared += has(t.triangles[j], v);
      if (shared == 2) tw.edges.push_back({i, j});
    }
  return tw;
}

// ---------------------------------------------------------------- export

std::string weave_json(const WeaveBlueprint& w) {
  nlohmann::json j;
  j["schema"] = "weave.v1";
  j["n"] = w.n;
  j["braid"] = w.beta.str();
  j["slice"] = w.slice;
  nlohmann::json blocks = nlohmann::json::array();
  for (auto& b : w.blocks) blocks.push_back({{"level", b.level}, {"hexavalent", b.hexavalent}, {"tetravalent", b.tetravalent}});
  j["blocks"] = blocks;
  j["vertices"] = {{"trivalent", w.trivalent_count()}, {"hexavalent", w.hexavalent_count()}, {"tetravalent", w.tetravalent_count()}};
  auto cb = cycle_basis(w);
  nlohmann::json closed = nlohmann::json::array(), rel = nlohmann::json::array();
  for (auto& c : cb.closed) closed.push_back({{"level", c.level}, {"from", c.from}, {"to", c.to}, {"string", c.string}});
  for (auto& c : cb.relative) rel.push_back({{"string", c.string}, {"slice", c.slice}, {"depth", c.depth}});
  j["cycles"] = {{"closed", closed}, {"relative", rel}};
  nlohmann::json strings = nlohmann::json::array();
  for (auto& s : w.strings.strings) strings.push_back({{"level", s.level}, {"start", s.start}, {"end", s.end}});
  j["strings"] = strings;
  j["epsilon"] = intersection_matrix(w);
  j["boundary_word"] = boundary_word(w).word;
  return j.dump();
}

std::string weave_svgdata(const WeaveBlueprint& w) {
  nlohmann::json j;
  j["schema"] = "weave.v1";
  j["kind"] = "svgdata";
  j["n"] = w.n;
  j["width"] = w.beta.length() + 1;
  j["height"] = static_cast<int>(w.slice.size()) + 1;
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  static const char* kinds[] = {"trivalent", "hexavalent", "tetravalent", "boundary"};
  for (size_t i = 0; i < w.vertices.size(); ++i) {
    auto& v = w.vertices[i];
    // coordinates quantized so CLI and service outputs agree byte for byte
    vs.push_back({{"id", i}, {"kind", kinds[v.kind]}, {"block", v.block}, {"color", v.color},
                  {"x", std::round(v.x * 1000) / 1000}, {"y", v.y}});
  }
  for (auto& e : w.edges) es.push_back({{"a", e.a}, {"b", e.b}, {"color", e.color}});
  j["vertices"] = vs;
  j["edges"] = es;
  return j.dump();
}

std::string weave_svg(const WeaveBlueprint& w) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  double sx = 120, sy = 60, ox = 80, oy = 90;
  double width = (w.beta.length() + 1) * sx + 2 * ox;
  double height = (w.slice.size() + 1) * sy + 2 * oy;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  auto X = [&](double x) { return ox + (x + 0.5) * sx; };
  auto Y = [&](double y) { return oy + y * sy; };
  for (auto& e : w.edges) {
    auto &a = w.vertices[e.a], &b = w.vertices[e.b];
    os << "  <line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
       << "\" stroke=\"" << palette[(e.color - 1) % 8] << "\" stroke-width=\"3\"/>\n";
  }
  for (auto& v : w.vertices) {
    if (v.kind == WeaveVertex::BoundaryPoint) continue;
    os << "  <circle cx=\"" << X(v.x) << "\" cy=\"" << Y(v.y) << "\" r=\"" << (v.kind == WeaveVertex::Trivalent ? 6 : 4)
       << "\" fill=\"" << (v.kind == WeaveVertex::Trivalent ? palette[(v.color - 1) % 8] : "#333") << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lf
