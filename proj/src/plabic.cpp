#include "lf/plabic.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "lf/rational.hpp"

namespace lf {

// ---------------------------------------------------------------- fences

PlabicFence fence_from_braid(const BraidWord& beta) {
  beta.validate();
  PlabicFence f;
  f.n = beta.n;
  f.length = beta.length();
  f.levels.assign(beta.n - 1, {});
  for (int t = 0; t < beta.length(); ++t) f.levels[beta.letters[t] - 1].push_back(t + 1);
  return f;
}

std::vector<PlabicFence::Face> PlabicFence::faces() const {
  std::vector<Face> out;
  for (int i = 0; i + 1 < n; ++i)
    for (size_t k = 1; k < levels[i].size(); ++k) out.push_back({i + 1, levels[i][k - 1], levels[i][k]});
  for (int i = 0; i + 1 < n; ++i) {
    if (levels[i].empty()) continue;
    out.push_back({i + 1, 0, levels[i].front()});
    out.push_back({i + 1, levels[i].back(), 0});
  }
  return out;
}

int PlabicFence::closed_face_count() const {
  int c = 0;
  for (auto& l : levels) c += std::max(static_cast<int>(l.size()) - 1, 0);
  return c;
}

// ---------------------------------------------------------------- graph core

PlabicGraph PlabicGraph::from_geometry(int boundary, const std::vector<Color>& colors,
                                       const std::vector<std::pair<double, double>>& xy,
                                       const std::vector<GeoEdge>& edges) {
  PlabicGraph g;
  g.boundary_ = boundary;
  g.color_ = colors;
  g.valive_.assign(colors.size(), true);
  g.rot_.assign(colors.size(), {});
  for (int i = 0; i < boundary; ++i) g.edges_.push_back({i, (i + 1) % boundary, true, true});
  std::vector<std::vector<std::pair<double, int>>> around(colors.size());
  std::vector<int> inner(boundary, -1);
  for (auto& ge : edges) {
    int e = static_cast<int>(g.edges_.size());
    g.edges_.push_back({ge.u, ge.v, false, true});
    for (int side = 0; side < 2; ++side) {
      int a = side ? ge.v : ge.u;
      int b = side ? ge.u : ge.v;
      int dart = 2 * e + side;
      if (a < boundary) {
        if (inner[a] != -1) throw PlabicError("boundary point with more than one edge");
        inner[a] = dart;
        continue;
      }
      double tx = xy[b].first, ty = xy[b].second;
      if (ge.anchored) tx = ge.mx, ty = ge.my;
      around[a].push_back({std::atan2(ty - xy[a].second, tx - xy[a].first), dart});
    }
  }
  for (int i = 0; i < boundary; ++i) {
    if (inner[i] == -1) throw PlabicError("boundary point without an edge");
    int prev = (i + boundary - 1) % boundary;
    g.rot_[i] = {2 * prev + 1, inner[i], 2 * i};
  }
  for (size_t v = boundary; v < colors.size(); ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (auto& [ang, d] : around[v]) g.rot_[v].push_back(d);
  }
  return g;
}

int PlabicGraph::degree(int v) const {
  int d = 0;
  for (int x : rot_[v])
    if (!rim_dart(x)) ++d;
  return d;
}

std::vector<int> PlabicGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int x : rot_[v])
    if (!rim_dart(x)) out.push_back(head(x));
  return out;
}

int PlabicGraph::internal_vertex_count() const {
  int c = 0;
  for (int v = boundary_; v < vertex_slots(); ++v) c += valive_[v];
  return c;
}

int PlabicGraph::internal_edge_count() const {
  int c = 0;
  for (auto& e : edges_) c += e.alive && !e.rim;
  return c;
}

int PlabicGraph::position(int v, int d) const {
  auto& r = rot_[v];
  auto it = std::find(r.begin(), r.end(), d);
  if (it == r.end()) throw std::logic_error("dart not in rotation");
  return static_cast<int>(it - r.begin());
}

void PlabicGraph::retail(int d, int from, int to) {
  Edge& e = edges_[d >> 1];
  if (d & 1) {
    if (e.v != from) throw std::logic_error("retail mismatch");
    e.v = to;
  } else {
    if (e.u != from) throw std::logic_error("retail mismatch");
    e.u = to;
  }
}

std::vector<std::vector<int>> PlabicGraph::faces() const {
  int nd = 2 * static_cast<int>(edges_.size());
  std::vector<int> pos(nd, -1);
  for (int v = 0; v < vertex_slots(); ++v)
    if (valive_[v])
      for (size_t k = 0; k < rot_[v].size(); ++k) pos[rot_[v][k]] = static_cast<int>(k);
  std::vector<char> seen(nd, 0);
  std::vector<std::vector<int>> out;
  for (int d0 = 0; d0 < nd; ++d0) {
    if (!edges_[d0 >> 1].alive || seen[d0]) continue;
    std::vector<int> face;
    int d = d0;
    while (!seen[d]) {
      seen[d] = 1;
      face.push_back(d);
      int h = head(d);
      auto& r = rot_[h];
      int p = pos[d ^ 1];
      d = r[(p + r.size() - 1) % r.size()];
    }
    bool outer = boundary_ > 0 && std::find(face.begin(), face.end(), 0) != face.end();
    if (!outer) out.push_back(std::move(face));
  }
  return out;
}

bool PlabicGraph::touches_boundary(const std::vector<int>& face) const {
  for (int d : face)
    if (rim_dart(d) || tail(d) < boundary_) return true;
  return false;
}

void PlabicGraph::validate() const {
  int V = 0, E = 0;
  for (int v = 0; v < vertex_slots(); ++v) V += valive_[v];
  for (auto& e : edges_) E += e.alive;
  int F = static_cast<int>(faces().size()) + (boundary_ > 0 ? 1 : 0);
  if (V - E + F != 2) throw PlabicError("rotation system is not a planar disk embedding");
  for (int v = 0; v < boundary_; ++v)
    if (degree(v) != 1) throw PlabicError("boundary point must have exactly one edge");
  for (auto& e : edges_) {
    if (!e.alive || e.rim) continue;
    if (e.u < boundary_ || e.v < boundary_) continue;
    if (color_[e.u] == color_[e.v]) throw PlabicError("graph is not bipartite");
  }
}

int PlabicGraph::add_vertex(Color c) {
  color_.push_back(c);
  valive_.push_back(true);
  rot_.emplace_back();
  return vertex_slots() - 1;
}

void PlabicGraph::contract(int e) {
  Edge& ed = edges_[e];
  int u = ed.u, v = ed.v;
  if (u == v) throw std::logic_error("contracting a loop");
  int du = 2 * e, dv = 2 * e + 1;
  std::vector<int> merged;
  auto append_after = [&](int w, int d) {
    auto& r = rot_[w];
    int p = position(w, d);
    for (size_t k = 1; k < r.size(); ++k) merged.push_back(r[(p + k) % r.size()]);
  };
  append_after(u, du);
  append_after(v, dv);
  for (int d : rot_[v])
    if (d != dv) retail(d, v, u);
  for (int d : merged)
    if (head(d) == u) throw std::logic_error("contraction creates a loop");
  rot_[u] = std::move(merged);
  rot_[v].clear();
  valive_[v] = false;
  ed.alive = false;
}

void PlabicGraph::remove_degree_two(int v) {
  if (rot_[v].size() != 2) throw PlabicError("vertex reduction needs a degree-2 vertex");
  int d1 = rot_[v][0], d2 = rot_[v][1];
  int y = head(d2);
  if (head(d1) == y) throw PlabicError("vertex reduction would create a loop");
  retail(d1, v, y);
  auto& ry = rot_[y];
  ry[position(y, d2 ^ 1)] = d1;
  edges_[d2 >> 1].alive = false;
  rot_[v].clear();
  valive_[v] = false;
}

int PlabicGraph::insert_vertex(int e, Color c) {
  if (edges_[e].rim || !edges_[e].alive) throw PlabicError("cannot subdivide this edge");
  int x = add_vertex(c);
  int w = edges_[e].v;
  int e2 = static_cast<int>(edges_.size());
  edges_.push_back({x, w, false, true});
  edges_[e].v = x;
  auto& rw = rot_[w];
  rw[position(w, 2 * e + 1)] = 2 * e2 + 1;
  rot_[x] = {2 * e + 1, 2 * e2};
  return x;
}

int PlabicGraph::split_off(int v, int d0, int d1) {
  auto r = rot_[v];
  int p = position(v, d0);
  if (r[(p + 1) % r.size()] != d1) throw std::logic_error("split darts not consecutive");
  int x = add_vertex(color_[v]);
  int e = static_cast<int>(edges_.size());
  edges_.push_back({v, x, false, true});
  std::vector<int> rest;
  for (size_t k = 2; k < r.size(); ++k) rest.push_back(r[(p + k) % r.size()]);
  for (int d : rest) retail(d, v, x);
  rot_[v] = {d0, d1, 2 * e};
  rot_[x] = {2 * e + 1};
  rot_[x].insert(rot_[x].end(), rest.begin(), rest.end());
  return x;
}

void PlabicGraph::compact() {
  std::vector<int> vmap(vertex_slots(), -1), emap(edges_.size(), -1);
  int nv = 0, ne = 0;
  for (int v = 0; v < vertex_slots(); ++v)
    if (valive_[v]) vmap[v] = nv++;
  for (size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].alive) emap[e] = ne++;
  PlabicGraph h;
  h.boundary_ = boundary_;
  h.color_.resize(nv);
  h.valive_.assign(nv, true);
  h.rot_.resize(nv);
  h.edges_.resize(ne);
  for (size_t e = 0; e < edges_.size(); ++e) {
    if (!edges_[e].alive) continue;
    h.edges_[emap[e]] = {vmap[edges_[e].u], vmap[edges_[e].v], edges_[e].rim, true};
  }
  for (int v = 0; v < vertex_slots(); ++v) {
    if (!valive_[v]) continue;
    h.color_[vmap[v]] = color_[v];
    for (int d : rot_[v]) h.rot_[vmap[v]].push_back(2 * emap[d >> 1] + (d & 1));
  }
  *this = std::move(h);
}

// ---------------------------------------------------------------- routing

std::vector<int> strand_permutation(const PlabicGraph& g) {
  g.validate();
  int b = g.boundary_count();
  std::vector<int> pi(b);
  int limit = 4 * static_cast<int>(g.edges().size()) + 8;
  for (int i = 0; i < b; ++i) {
    int d = g.rotation(i)[1];
    for (int steps = 0;; ++steps) {
      if (steps > limit) throw PlabicError("strand does not terminate");
      int v = g.head(d);
      if (v < b) {
        pi[i] = v + 1;
        break;
      }
      auto& r = g.rotation(v);
      int p = static_cast<int>(std::find(r.begin(), r.end(), d ^ 1) - r.begin());
      int k = static_cast<int>(r.size());
      d = g.color(v) == Color::Black ? r[(p + k - 1) % k] : r[(p + 1) % k];
    }
  }
  return pi;
}

// ---------------------------------------------------------------- moves

namespace {

std::string square_problem(const PlabicGraph& g, const std::vector<int>& f) {
  if (g.touches_boundary(f)) return "face touches the boundary";
  if (f.size() != 4) return "face is not a quadrilateral";
  std::set<int> vs;
  for (int d : f) vs.insert(g.tail(d));
  if (vs.size() != 4) return "face boundary repeats a vertex";
  for (int k = 0; k < 4; ++k) {
    int v = g.tail(f[k]), w = g.tail(f[(k + 1) % 4]);
    if (g.color(v) == g.color(w)) return "face colors do not alternate";
    if (g.degree(v) < 3) return "face has a vertex of degree " + std::to_string(g.degree(v));
  }
  return {};
}

}  // namespace

std::vector<int> eligible_squares(const PlabicGraph& g) {
  std::vector<int> out;
  auto fs = g.faces();
  for (size_t i = 0; i < fs.size(); ++i)
    if (square_problem(g, fs[i]).empty()) out.push_back(static_cast<int>(i));
  return out;
}

PlabicGraph square_move(const PlabicGraph& g, int face) {
  auto fs = g.faces();
  if (face < 0 || face >= static_cast<int>(fs.size())) throw PlabicError("no such face");
  auto f = fs[face];
  auto why = square_problem(g, f);
  if (!why.empty()) throw PlabicError("square move not allowed: " + why);
  PlabicGraph h = g;
  std::vector<int> vs;
  for (int k = 0; k < 4; ++k) {
    int v = h.tail(f[k]);
    vs.push_back(v);
    if (h.degree(v) > 3) h.split_off(v, f[k], f[(k + 3) % 4] ^ 1);
  }
  for (int v : vs) h.recolor(v, h.color(v) == Color::Black ? Color::White : Color::Black);
  return normal_form(std::move(h));
}

PlabicGraph vertex_reduction(const PlabicGraph& g, int v) {
  if (v < g.boundary_count() || v >= g.vertex_slots() || !g.alive(v)) throw PlabicError("no such internal vertex");
  if (g.degree(v) != 2) throw PlabicError("vertex reduction needs degree 2, got " + std::to_string(g.degree(v)));
  PlabicGraph h = g;
  h.remove_degree_two(v);
  h.compact();
  return h;
}

PlabicGraph insert_degree_two(const PlabicGraph& g, int edge, Color c) {
  PlabicGraph h = g;
  h.insert_vertex(edge, c);
  return h;
}

PlabicGraph normal_form(PlabicGraph g) {
  int b = g.boundary_count();
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t e = 0; e < g.edges().size() && !changed; ++e) {
      auto ed = g.edges()[e];
      if (!ed.alive || ed.rim || ed.u < b || ed.v < b) continue;
      if (g.color(ed.u) == g.color(ed.v)) {
        g.contract(static_cast<int>(e));
        changed = true;
      }
    }
    for (int v = b; v < g.vertex_slots() && !changed; ++v) {
      if (!g.alive(v) || g.degree(v) != 2) continue;
      auto nb = g.neighbors(v);
      if (nb[0] == nb[1]) continue;
      bool bx = nb[0] < b, by = nb[1] < b;
      if (bx && by) continue;
      if (!bx && !by) {
        g.remove_degree_two(v);
        changed = true;
      } else if (g.color(v) == Color::Black) {
        g.remove_degree_two(v);
        changed = true;
      }
    }
    for (int v = 0; v < b && !changed; ++v) {
      int d = -1;
      for (int x : g.rotation(v))
        if (!g.rim_dart(x)) d = x;
      int w = g.head(d);
      if (w >= b && g.color(w) == Color::Black) {
        g.insert_vertex(d >> 1, Color::White);
        changed = true;
      }
    }
  }
  g.compact();
  return g;
}

std::string canonical_code(const PlabicGraph& g) {
  int b = g.boundary_count();
  std::vector<int> label(g.vertex_slots(), -1), start(g.vertex_slots(), -1), order;
  std::deque<int> q;
  for (int v = 0; v < b; ++v) {
    label[v] = v;
    start[v] = g.rotation(v)[0];
    order.push_back(v);
    q.push_back(v);
  }
  int next = b;
  std::ostringstream os;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    auto& r = g.rotation(v);
    int p = static_cast<int>(std::find(r.begin(), r.end(), start[v]) - r.begin());
    for (size_t k = 0; k < r.size(); ++k) {
      int d = r[(p + k) % r.size()];
      int h = g.head(d);
      if (label[h] == -1) {
        label[h] = next++;
        start[h] = d ^ 1;
        order.push_back(h);
        q.push_back(h);
      }
    }
  }
  for (int v : order) {
    os << (g.color(v) == Color::Black ? 'B' : g.color(v) == Color::White ? 'W' : 'O');
    auto& r = g.rotation(v);
    int p = static_cast<int>(std::find(r.begin(), r.end(), start[v]) - r.begin());
    for (size_t k = 0; k < r.size(); ++k) os << ',' << label[g.head(r[(p + k) % r.size()])];
    os << ';';
  }
  return os.str();
}

std::vector<PlabicGraph> square_move_orbit(const PlabicGraph& g) {
  std::vector<PlabicGraph> out{normal_form(g)};
  std::unordered_set<std::string> seen{canonical_code(out[0])};
  for (size_t i = 0; i < out.size(); ++i) {
    for (int f : eligible_squares(out[i])) {
      PlabicGraph h = square_move(out[i], f);
      if (seen.insert(canonical_code(h)).second) out.push_back(std::move(h));
    }
  }
  return out;
}

std::size_t plabic_orbit_count(const PlabicGraph& g) { return square_move_orbit(g).size(); }

FaceCycleReport face_cycle_relation(const PlabicGraph& g) {
  FaceCycleReport rep;
  auto fs = g.faces();
  size_t ne = g.edges().size();
  std::vector<Vec> closed;
  std::vector<long> total(ne, 0);
  for (auto& f : fs) {
    Vec chain(ne);
    for (int d : f) {
      if (g.rim_dart(d)) continue;
      chain[d >> 1] += (d & 1) ? -1 : 1;
      total[d >> 1] += (d & 1) ? -1 : 1;
    }
    if (!g.touches_boundary(f)) closed.push_back(std::move(chain));
  }
  rep.faces = static_cast<int>(fs.size());
  rep.closed_faces = static_cast<int>(closed.size());
  rep.sum_zero = std::all_of(total.begin(), total.end(), [](long x) { return x == 0; });
  rep.closed_rank = rank(closed);
  return rep;
}

PlabicGraph fence_graph(const PlabicFence& f) {
  int n = f.n, L = f.length;
  int b = 2 * n;
  std::vector<Color> colors(b, Color::Boundary);
  std::vector<std::pair<double, double>> xy(b);
  for (int i = 1; i <= n; ++i) {
    xy[i - 1] = {L + 1.0, -static_cast<double>(i)};
    xy[b - i] = {0.0, -static_cast<double>(i)};
  }
  std::vector<PlabicGraph::GeoEdge> edges;
  auto vertex = [&](Color c, double x, double y) {
    colors.push_back(c);
    xy.push_back({x, y});
    return static_cast<int>(colors.size()) - 1;
  };
  std::vector<std::vector<std::pair<double, int>>> line(n + 1);
  for (int i = 1; i < n; ++i)
    for (int t : f.levels[i - 1]) {
      int w = vertex(Color::White, t, -i);
      int k = vertex(Color::Black, t, -(i + 1));
      edges.push_back({w, k});
      line[i].push_back({static_cast<double>(t), w});
      line[i + 1].push_back({static_cast<double>(t), k});
    }
  for (int i = 1; i <= n; ++i) {
    auto& pts = line[i];
    std::sort(pts.begin(), pts.end());
    if (pts.empty()) pts.push_back({(L + 1) / 2.0, vertex(Color::White, (L + 1) / 2.0, -i)});
    std::vector<int> chain;
    for (size_t k = 0; k < pts.size(); ++k) {
      if (k > 0 && colors[pts[k].second] == colors[pts[k - 1].second]) {
        Color c = colors[pts[k].second] == Color::White ? Color::Black : Color::White;
        chain.push_back(vertex(c, (pts[k].first + pts[k - 1].first) / 2, -i));
      }
      chain.push_back(pts[k].second);
    }
    edges.push_back({b - i, chain.front()});
    for (size_t k = 1; k < chain.size(); ++k) edges.push_back({chain[k - 1], chain[k]});
    edges.push_back({chain.back(), i - 1});
  }
  auto g = PlabicGraph::from_geometry(b, colors, xy, edges);
  g.validate();
  return g;
}

// ---------------------------------------------------------------- weak separation

bool weakly_separated(Subset a, Subset b, int m) {
  Subset x = a & ~b, y = b & ~a;
  std::vector<int> seq;
  for (int i = 0; i < m; ++i) {
    if (x >> i & 1) seq.push_back(0);
    if (y >> i & 1) seq.push_back(1);
  }
  int changes = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    if (seq[i] != seq[(i + 1) % seq.size()]) ++changes;
  return changes <= 2;
}

std::vector<Subset> cyclic_intervals(int k, int m) {
  std::vector<Subset> out;
  for (int a = 0; a < m; ++a) {
    Subset s = 0;
    for (int j = 0; j < k; ++j) s |= Subset(1) << ((a + j) % m);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::string subset_str(Subset s, int m) {
  std::string out;
  for (int i = 0; i < m; ++i)
    if (s >> i & 1) {
      if (!out.empty()) out += ',';
      out += std::to_string(i + 1);
    }
  return "{" + out + "}";
}

namespace {

using Bits = std::bitset<128>;

struct CliqueCounter {
  const std::vector<Bits>* adj;
  std::uint64_t count = 0;
  bool pure = true;
  size_t want = 0;
  bool keep = false;
  std::vector<int> current;
  std::vector<std::vector<int>> found;

  void run(Bits p, Bits x) {
    if (p.none()) {
      if (x.none()) {
        ++count;
        if (current.size() != want) pure = false;
        if (keep) found.push_back(current);
      }
      return;
    }
    int pivot = -1;
    size_t best = 0;
    Bits px = p | x;
    for (size_t u = px._Find_first(); u < px.size(); u = px._Find_next(u)) {
      size_t c = (p & (*adj)[u]).count();
      if (pivot == -1 || c > best) pivot = static_cast<int>(u), best = c;
    }
    Bits cand = p & ~(*adj)[pivot];
    for (size_t v = cand._Find_first(); v < cand.size(); v = cand._Find_next(v)) {
      current.push_back(static_cast<int>(v));
      run(p & (*adj)[v], x & (*adj)[v]);
      current.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
};

}  // namespace

WSCount weakly_separated_count(int k, int m, bool keep) {
  if (k < 1 || k >= m || m > 9) throw std::invalid_argument("weak separation needs 1 <= k < m <= 9");
  auto intervals = cyclic_intervals(k, m);
  std::vector<Subset> verts;
  for (Subset s = 0; s < (Subset(1) << m); ++s)
    if (std::popcount(s) == k && std::find(intervals.begin(), intervals.end(), s) == intervals.end()) verts.push_back(s);
  std::vector<Bits> adj(verts.size());
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = 0; j < verts.size(); ++j)
      if (i != j && weakly_separated(verts[i], verts[j], m)) adj[i].set(j);
  WSCount res;
  res.expected_size = k * (m - k) + 1;
  CliqueCounter cc;
  cc.adj = &adj;
  cc.want = res.expected_size - intervals.size();
  cc.keep = keep;
  Bits all;
  for (size_t i = 0; i < verts.size(); ++i) all.set(i);
  cc.run(all, Bits());
  res.count = cc.count;
  res.pure = cc.pure;
  for (auto& c : cc.found) {
    std::vector<Subset> col = intervals;
    for (int i : c) col.push_back(verts[i]);
    std::sort(col.begin(), col.end());
    res.collections.push_back(std::move(col));
  }
  return res;
}

std::vector<Subset> fan_collection(int m) {
  auto col = cyclic_intervals(2, m);
  for (int j = 3; j < m; ++j) col.push_back(Subset(1) | Subset(1) << (j - 1));
  std::sort(col.begin(), col.end());
  return col;
}

std::vector<Subset> rectangle_collection(int k, int m) {
  std::set<Subset> col;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= m - k; ++j) {
      Subset s = 0;
      for (int a = 1; a <= k - i; ++a) s |= Subset(1) << (a - 1);
      for (int a = k - i + j + 1; a <= k + j; ++a) s |= Subset(1) << (a - 1);
      col.insert(s);
    }
  for (Subset s : cyclic_intervals(k, m)) col.insert(s);
  return {col.begin(), col.end()};
}

PlabicGraph plabic_from_collection(int k, int m, const std::vector<Subset>& collection) {
  const double pi = std::acos(-1.0);
  std::vector<std::pair<double, double>> unit(m);
  for (int i = 0; i < m; ++i) unit[i] = {std::cos(pi / 2 - 2 * pi * i / m), std::sin(pi / 2 - 2 * pi * i / m)};
  auto point = [&](Subset s) {
    double x = 0, y = 0;
    for (int i = 0; i < m; ++i)
      if (s >> i & 1) x += unit[i].first, y += unit[i].second;
    return std::make_pair(x, y);
  };
  std::set<Subset> in(collection.begin(), collection.end());
  for (Subset s : collection)
    if (std::popcount(s) != k) throw PlabicError("collection member of the wrong size");
  for (Subset a : collection)
    for (Subset b : collection)
      if (!weakly_separated(a, b, m)) throw PlabicError("collection is not weakly separated");
  // Tiles: white for (k-1)-sets, black for (k+1)-sets, with at least three members.
  std::map<std::pair<int, Subset>, std::vector<Subset>> cliques;
  for (Subset a : collection)
    for (int i = 0; i < m; ++i) {
      Subset bit = Subset(1) << i;
      if (a & bit)
        cliques[{0, a & ~bit}].push_back(a);
      else
        cliques[{1, a | bit}].push_back(a);
    }
  std::map<std::pair<int, Subset>, int> tile_id;
  std::vector<Color> colors(m, Color::Boundary);
  std::vector<std::pair<double, double>> xy(m);
  for (auto& [key, members] : cliques) {
    if (members.size() < 3) continue;
    tile_id[key] = static_cast<int>(colors.size());
    colors.push_back(key.first == 0 ? Color::White : Color::Black);
    double x = 0, y = 0;
    for (Subset s : members) {
      auto p = point(s);
      x += p.first, y += p.second;
    }
    xy.push_back({x / members.size(), y / members.size()});
  }
  auto intervals = cyclic_intervals(k, m);
  std::vector<PlabicGraph::GeoEdge> edges;
  for (Subset a : collection)
    for (Subset b : collection) {
      if (a >= b || std::popcount(a & b) != k - 1) continue;
      auto mid = point(a);
      auto pb = point(b);
      double mx = (mid.first + pb.first) / 2, my = (mid.second + pb.second) / 2;
      auto w = tile_id.find({0, a & b});
      auto k1 = tile_id.find({1, a | b});
      bool hw = w != tile_id.end(), hb = k1 != tile_id.end();
      if (hw && hb) {
        edges.push_back({w->second, k1->second, mx, my, true});
        continue;
      }
      for (int s = 0; s < m; ++s) {
        Subset i0 = intervals[s % intervals.size()], i1 = intervals[(s + 1) % intervals.size()];
        if (!((a == i0 && b == i1) || (a == i1 && b == i0))) continue;
        if (hw == hb) throw PlabicError("boundary segment without a unique tile");
        int t = hw ? w->second : k1->second;
        xy[s] = {mx, my};
        edges.push_back({t, s, mx, my, true});
      }
    }
  auto g = PlabicGraph::from_geometry(m, colors, xy, edges);
  g = normal_form(std::move(g));
  g.validate();
  return g;
}

// ---------------------------------------------------------------- export

std::string plabic_json(const PlabicGraph& g) {
  nlohmann::json j;
  j["schema"] = "plabic.v1";
  j["boundary"] = g.boundary_count();
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array(), rot = nlohmann::json::array();
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.alive(v)) continue;
    vs.push_back(g.color(v) == Color::Black ? "black" : g.color(v) == Color::White ? "white" : "boundary");
    rot.push_back(g.neighbors(v));
  }
  for (auto& e : g.edges())
    if (e.alive && !e.rim) es.push_back({e.u, e.v});
  j["vertices"] = vs;
  j["edges"] = es;
  j["rotation"] = rot;
  return j.dump();
}

std::string fence_json(const PlabicFence& f) {
  nlohmann::json j;
  j["schema"] = "plabic.v1";
  j["n"] = f.n;
  j["levels"] = f.levels;
  j["closed_faces"] = f.closed_face_count();
  return j.dump();
}

std::string plabic_dot(const PlabicGraph& g) {
  std::ostringstream os;
  os << "graph plabic {\n";
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.alive(v)) continue;
    os << "  v" << v;
    if (g.color(v) == Color::Boundary)
      os << " [shape=point,label=\"" << v + 1 << "\"]";
    else
      os << " [shape=circle,style=filled,fillcolor=" << (g.color(v) == Color::Black ? "black" : "white") << ",label=\"\"]";
    os << ";\n";
  }
  for (auto& e : g.edges())
    if (e.alive && !e.rim) os << "  v" << e.u << " -- v" << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace lf
