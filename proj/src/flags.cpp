#include "lf/flags.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

namespace lf {

Matrix tau(int n, int i, const Q& z, TauConvention conv) {
  if (i < 1 || i >= n) throw std::invalid_argument("tau level out of range");
  Matrix m = Matrix::identity(n);
  int a = i - 1;
  Q s = conv == TauConvention::Standard ? Q(1) : Q(-1);
  m(a, a) = z;
  m(a, a + 1) = -s;
  m(a + 1, a) = s;
  m(a + 1, a + 1) = 0;
  return m;
}

FlagChain make_chain(const BraidWord& beta, const std::vector<Q>& z, TauConvention conv) {
  beta.validate();
  if (z.size() != beta.letters.size()) throw std::invalid_argument("one parameter per letter required");
  FlagChain c;
  c.n = beta.n;
  c.letters = beta.letters;
  c.z = z;
  c.convention = conv;
  c.M.push_back(Matrix::identity(beta.n));
  for (size_t t = 0; t < z.size(); ++t) c.M.push_back(c.M.back() * tau(beta.n, beta.letters[t], z[t], conv));
  return c;
}

Q principal_minor(const Matrix& m, int i) {
  if (i < 0 || i > m.size()) throw std::invalid_argument("minor size out of range");
  return leading_minor(m, i);
}

namespace {

Vec basis_vector(int n, int r) {
  Vec e(n, Q(0));
  e[r] = 1;
  return e;
}

Vec scaled(const Vec& v, const Q& a) {
  Vec out(v);
  for (auto& x : out) x *= a;
  return out;
}

// Columns L_r spanning V_r(M) with L_r in span(e_r, ..., e_{n-1}) and unit entry at r.
std::vector<Vec> adapted(const Matrix& m) {
  int n = m.size();
  std::vector<Vec> out;
  for (int r = 1; r <= n; ++r) {
    std::vector<Vec> cols(r, Vec(r));
    for (int k = 0; k < r; ++k)
      for (int q = 0; q < r; ++q) cols[k][q] = m(q, k);
    Vec x = solve_columns(cols, basis_vector(r, r - 1));
    Vec v(n, Q(0));
    for (int k = 0; k < r; ++k)
      for (int q = 0; q < n; ++q) v[q] += x[k] * m(q, k);
    out.push_back(std::move(v));
  }
  return out;
}

using Basis = std::vector<Vec>;

// Flag of the region after the first m letters of `word` when the flag on the
// far side of the slice is L.
Basis region_flag(const Basis& l, const std::vector<int>& word, int m) {
  int n = static_cast<int>(l.size());
  std::vector<int> u(n);
  for (int p = 0; p < n; ++p) u[p] = p;
  for (int q = 0; q < m; ++q) std::swap(u[word[q] - 1], u[word[q]]);
  Basis out;
  for (int p = 0; p < n; ++p) out.push_back(l[u[p]]);
  return out;
}

struct Step {
  Basis from, to;
  int color;
};

// Crossing an edge of `color` from flag X to flag Y with the vector on sheet s.
void cross(const Step& st, int& s, Vec& w) {
  int m = st.color;
  if (s != m && s != m + 1) return;
  if (s == m) {
    s = m + 1;
    return;
  }
  Basis base(st.from.begin(), st.from.begin() + m);
  base.push_back(st.to[m - 1]);
  Vec x = solve_columns(base, w);
  w = scaled(st.to[m - 1], x.back());
  s = m;
}

struct LoopWalker {
  std::vector<Step> above, below;

  void run(std::vector<int>& word, int& pos, const std::vector<BraidMove>& moves, const Basis& l) {
    for (auto mv : moves) {
      auto w2 = apply_move(word, mv);
      int p = mv.pos;
      auto reg = [&](const std::vector<int>& wd, int m) { return region_flag(l, wd, m); };
      if (mv.kind == 'b') {
        auto rt = reg(word, p), rb = reg(word, p + 3);
        auto l1 = reg(word, p + 1), l2 = reg(word, p + 2), q1 = reg(w2, p + 1), q2 = reg(w2, p + 2);
        if (pos == p) {
          above.push_back({rt, q1, w2[p]});
          above.push_back({q1, q2, w2[p + 1]});
          below.push_back({l1, l2, word[p + 1]});
          below.push_back({l2, rb, word[p + 2]});
        } else if (pos == p + 1) {
          above.push_back({l1, rt, word[p]});
          above.push_back({rt, q1, w2[p]});
          below.push_back({l2, rb, word[p + 2]});
          below.push_back({rb, q2, w2[p + 2]});
        } else if (pos == p + 2) {
          above.push_back({l2, l1, word[p + 1]});
          above.push_back({l1, rt, word[p]});
          below.push_back({rb, q2, w2[p + 2]});
          below.push_back({q2, q1, w2[p + 1]});
        }
      } else {
        auto rt = reg(word, p), rb = reg(word, p + 2), l1 = reg(word, p + 1), q1 = reg(w2, p + 1);
        if (pos == p) {
          above.push_back({rt, q1, w2[p]});
          below.push_back({l1, rb, word[p + 1]});
        } else if (pos == p + 1) {
          above.push_back({l1, rt, word[p]});
          below.push_back({rb, q1, w2[p + 1]});
        }
      }
      pos = track_position(pos, mv);
      word = std::move(w2);
    }
  }
};

// Scalar by which the microstalk vector returns after the loop around the
// long cycle between blocks l < r on one level.
Q long_cycle_loop(const FlagChain& c, int l, int r, bool reversed) {
  int n = c.n, k = c.letters[l - 1];
  auto slice = half_twist_word(n);
  std::map<int, std::vector<BraidMove>> paths;
  for (int a : c.letters)
    if (!paths.count(a)) paths[a] = path_to_top(n, a);
  std::vector<Basis> ls;
  for (auto& m : c.M) ls.push_back(adapted(m));
  auto rev = [](std::vector<BraidMove> v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  auto rk = slice;
  for (auto mv : paths[k]) rk = apply_move(rk, mv);
  LoopWalker lw;
  auto word = rk;
  int pos = 0;
  lw.run(word, pos, rev(paths[k]), ls[l]);
  for (int m = l + 1; m < r; ++m) {
    int km = c.letters[m - 1];
    lw.run(word, pos, paths[km], ls[m - 1]);
    if (pos == 0) throw FlagError("long cycle meets a same-level block");
    lw.run(word, pos, rev(paths[km]), ls[m]);
  }
  lw.run(word, pos, paths[k], ls[r - 1]);
  if (pos != 0 || word != rk) throw std::logic_error("loop did not close");
  std::vector<Step> steps;
  steps.push_back({region_flag(ls[l - 1], rk, 0), region_flag(ls[l], rk, 0), k});
  steps.insert(steps.end(), lw.above.begin(), lw.above.end());
  steps.push_back({region_flag(ls[r - 1], rk, 0), region_flag(ls[r], rk, 0), k});
  steps.push_back({region_flag(ls[r], rk, 0), region_flag(ls[r], rk, 1), k});
  for (auto it = lw.below.rbegin(); it != lw.below.rend(); ++it) steps.push_back({it->to, it->from, it->color});
  steps.push_back({region_flag(ls[l - 1], rk, 1), region_flag(ls[l - 1], rk, 0), k});
  if (reversed) {
    std::reverse(steps.begin(), steps.end());
    for (auto& st : steps) std::swap(st.from, st.to);
  }
  Basis x0 = region_flag(ls[l - 1], rk, 0);
  int s = k;
  Vec w = x0[k - 1], w0 = w;
  for (auto& st : steps) cross(st, s, w);
  if (s != k) throw std::logic_error("loop ended on another sheet");
  Basis base(x0.begin(), x0.begin() + (k - 1));
  base.push_back(w0);
  return solve_columns(base, w).back();
}

}  // namespace

bool is_generic(const FlagChain& c, Genericity g) {
  for (auto& m : c.M)
    for (int r = 1; r <= c.n; ++r)
      if (leading_minor(m, r) == 0) return false;
  if (g == Genericity::Minors) return true;
  try {
    BraidWord b{c.n, c.letters};
    auto sd = string_diagram(b);
    for (size_t a = 0; a < sd.strings.size(); ++a)
      for (int j = sd.first_slice(static_cast<int>(a)); j <= sd.last_slice(static_cast<int>(a)); ++j)
        merodromy_transport(c, j, sd.strings[a].level);
    for (auto& s : sd.strings)
      if (s.closed() && long_cycle_loop(c, s.start, s.end, false) == 0) return false;
  } catch (const SingularError&) {
    return false;
  } catch (const FlagError&) {
    return false;
  }
  return true;
}

FlagChain sample_conf(const BraidWord& beta, std::uint64_t seed, Genericity g, TauConvention conv) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 17);
  for (int attempt = 1; attempt <= 64; ++attempt) {
    std::vector<Q> z;
    for (int t = 0; t < beta.length(); ++t) {
      int v = pick(rng) - 9;
      z.push_back(v >= 0 ? v + 1 : v);
    }
    auto c = make_chain(beta, z, conv);
    c.seed = seed;
    c.attempts = attempt;
    if (is_generic(c, g)) return c;
  }
  throw FlagError("no generic configuration after 64 draws");
}

std::vector<Q> initial_seed_values(const FlagChain& c, const StringDiagram& s) {
  std::vector<Q> out;
  for (size_t a = 0; a < s.strings.size(); ++a) {
    int lv = s.strings[a].level;
    Q v = leading_minor(c.M[s.first_slice(static_cast<int>(a))], lv);
    for (int j = s.first_slice(static_cast<int>(a)) + 1; j <= s.last_slice(static_cast<int>(a)); ++j)
      if (leading_minor(c.M[j], lv) != v) throw FlagError("minor depends on the diagonal used");
    if (v == 0) throw FlagError("degenerate configuration: vanishing minor");
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Vec>> propagate_decorations(const FlagChain& c) {
  int n = c.n;
  // Any representative of each flag works; perturb by upper-triangular factors
  // so the decorations never read the matrices' own columns.
  std::mt19937_64 rng(c.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> off(1, 5), diag(0, 4);
  static const int diag_vals[] = {1, 2, 3, -1, -2};
  std::vector<Matrix> g;
  for (auto& m : c.M) {
    Matrix b(n);
    for (int r = 0; r < n; ++r)
      for (int q = r; q < n; ++q) b(r, q) = q == r ? diag_vals[diag(rng)] : off(rng);
    g.push_back(m * b);
  }
  std::vector<Vec> cur;
  for (int p = 0; p < n; ++p) cur.push_back(basis_vector(n, p));
  std::vector<std::vector<Vec>> decs{cur};
  for (int t = 1; t <= c.length(); ++t) {
    int a = c.letters[t - 1], i = a - 1;
    std::vector<Vec> cols;
    for (int q = 0; q < a; ++q) cols.push_back(g[t].column(q));
    Vec neg = scaled(cur[i], Q(-1));
    cols.push_back(neg);
    Q mu = solve_columns(cols, cur[i + 1]).back();
    auto next = cur;
    for (int r = 0; r < n; ++r) next[i][r] = cur[i + 1][r] + mu * cur[i][r];
    next[i + 1] = neg;
    cur = std::move(next);
    decs.push_back(cur);
  }
  return decs;
}

Q merodromy(const std::vector<Vec>& dec, int depth) {
  int n = static_cast<int>(dec.size());
  Q prod = 1;
  for (int r = 0; r < depth; ++r) {
    std::vector<Vec> base(dec.begin(), dec.begin() + r);
    for (int q = r; q < n; ++q) base.push_back(basis_vector(n, q));
    try {
      prod *= solve_columns(base, dec[r])[r];
    } catch (const SingularError&) {
      throw FlagError("decoration not transverse to the bottom flag");
    }
  }
  return prod;
}

Q merodromy_transport(const FlagChain& c, int slice, int depth) {
  if (slice < 0 || slice > c.length() || depth < 1 || depth > c.n) throw std::invalid_argument("relative cycle out of range");
  return merodromy(propagate_decorations(c)[slice], depth);
}

Q merodromy_transport(const FlagChain& c, const Cycle& eta) {
  if (eta.kind != Cycle::Relative) throw std::invalid_argument("merodromy needs a relative cycle");
  return merodromy_transport(c, eta.slice, eta.depth);
}

Q wedge2(const Vec& u, const Vec& v) { return u[0] * v[1] - u[1] * v[0]; }

Q cross_ratio(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  Q den = wedge2(b, c) * wedge2(d, a);
  if (den == 0) throw FlagError("lines not transverse");
  return wedge2(a, b) * wedge2(c, d) / den;
}

Q wedge3(const Vec& a, const Vec& b, const Vec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Q triple_ratio(const Flag3& a, const Flag3& b, const Flag3& c) {
  auto pl = [](const Flag3& f, const Vec& v) { return wedge3(f.line, f.second, v); };
  Q den = pl(b, c.line) * pl(c, a.line) * pl(a, b.line);
  if (den == 0) throw FlagError("flags not generic");
  return pl(b, a.line) * pl(c, b.line) * pl(a, c.line) / den;
}

Flag3 chain_flag(const FlagChain& c, int t) {
  if (c.n != 3) throw std::invalid_argument("triple flags need n = 3");
  return {c.M[t].column(0), c.M[t].column(1)};
}

Cycle y_cycle(const WeaveBlueprint& w, int a, int b, int c) {
  if (w.n != 3) throw std::invalid_argument("Y-cycles are modeled for n = 3");
  if (!(0 <= a && a < b && b < c && c <= w.beta.length())) throw std::invalid_argument("Y-cycle needs slices a < b < c");
  Cycle y;
  y.kind = Cycle::Y;
  y.triple = {a, b, c};
  return y;
}

namespace {

// v = x * target + (vector in the plane of f); returns x * target.
Vec project_along(const Vec& v, const Vec& target, const Flag3& f) {
  try {
    Q x = solve_columns({target, f.line, f.second}, v)[0];
    return scaled(target, x);
  } catch (const SingularError&) {
    throw FlagError("Y-cycle flags not transverse");
  }
}

Q y_loop(const Flag3& a, const Flag3& b, const Flag3& c, bool reversed) {
  Vec v = a.line;
  if (!reversed) {
    v = project_along(v, b.line, c);
    v = project_along(v, c.line, a);
    v = project_along(v, a.line, b);
  } else {
    v = project_along(v, c.line, b);
    v = project_along(v, b.line, a);
    v = project_along(v, a.line, c);
  }
  for (size_t q = 0; q < v.size(); ++q)
    if (a.line[q] != 0) return v[q] / a.line[q];
  throw FlagError("zero line");
}

}  // namespace

Q cycle_monodromy(const FlagChain& c, const Cycle& gamma, const WeaveBlueprint& w) {
  if (w.beta.letters != c.letters) throw std::invalid_argument("chain and weave are over different braids");
  try {
    if (gamma.kind == Cycle::LongI) {
      Q lam = long_cycle_loop(c, gamma.from, gamma.to, gamma.reversed);
      if (lam == 0) throw FlagError("degenerate loop transport");
      return Q(-1) / lam;
    }
    if (gamma.kind == Cycle::Y) {
      Q lam = y_loop(chain_flag(c, gamma.triple[0]), chain_flag(c, gamma.triple[1]), chain_flag(c, gamma.triple[2]),
                     gamma.reversed);
      if (lam == 0) throw FlagError("degenerate loop transport");
      return Q(1) / lam;
    }
  } catch (const SingularError& e) {
    throw FlagError(std::string("transversality failure: ") + e.what());
  }
  throw std::invalid_argument("monodromy needs a closed cycle");
}

// ---------------------------------------------------------------- polygon scale

std::vector<std::pair<int, int>> diagonals(const Triangulation& t) {
  std::set<std::pair<int, int>> out;
  for (auto tri : t.triangles) {
    std::sort(tri.begin(), tri.end());
    for (auto [a, b] : {std::pair{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[0], tri[2]}}) {
      bool side = b - a == 1 || (a == 0 && b == t.m - 1);
      if (!side) out.insert({a, b});
    }
  }
  return {out.begin(), out.end()};
}

namespace {

std::vector<std::array<int, 3>> triangles_on(const Triangulation& t, std::pair<int, int> d) {
  std::vector<std::array<int, 3>> out;
  for (auto tri : t.triangles) {
    std::sort(tri.begin(), tri.end());
    if (std::count(tri.begin(), tri.end(), d.first) && std::count(tri.begin(), tri.end(), d.second)) out.push_back(tri);
  }
  if (out.size() != 2) throw std::invalid_argument("not a diagonal of the triangulation");
  return out;
}

// Quadrilateral a < b < c < d around diagonal (a, c), b inside (a, c).
std::array<int, 4> quadrilateral(const Triangulation& t, std::pair<int, int> d) {
  auto tris = triangles_on(t, d);
  int a = d.first, c = d.second, b = -1, e = -1;
  for (auto& tri : tris)
    for (int v : tri)
      if (v != a && v != c) (a < v && v < c ? b : e) = v;
  return {a, b, c, e};
}

}  // namespace

Q polygon_monodromy(const std::vector<Vec>& pts, const Triangulation& t, std::pair<int, int> diagonal) {
  auto [a, b, c, d] = quadrilateral(t, diagonal);
  return -cross_ratio(pts[a], pts[b], pts[c], pts[d]);
}

int polygon_pairing(const Triangulation& t, std::pair<int, int> d1, std::pair<int, int> d2) {
  for (auto tri : t.triangles) {
    std::sort(tri.begin(), tri.end());
    std::pair<int, int> es[3] = {{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[0], tri[2]}};
    int i = -1, j = -1;
    for (int q = 0; q < 3; ++q) {
      if (es[q] == d1) i = q;
      if (es[q] == d2) j = q;
    }
    if (i >= 0 && j >= 0 && i != j) return (j - i + 3) % 3 == 1 ? 1 : -1;
  }
  return 0;
}

Triangulation flip(const Triangulation& t, std::pair<int, int> diagonal) {
  auto [a, b, c, d] = quadrilateral(t, diagonal);
  Triangulation out{t.m, {}};
  for (auto tri : t.triangles) {
    std::sort(tri.begin(), tri.end());
    if (std::count(tri.begin(), tri.end(), a) && std::count(tri.begin(), tri.end(), c)) continue;
    out.triangles.push_back(tri);
  }
  out.triangles.push_back({a, b, d});
  out.triangles.push_back({b, c, d});
  return out;
}

void square_move_check(const std::vector<Vec>& pts, const Triangulation& t, std::pair<int, int> f,
                       SquareMoveReport& rep) {
  Q mf = polygon_monodromy(pts, t, f);
  if (mf == -1) {
    ++rep.degenerate;
    return;
  }
  auto [a, b, c, d] = quadrilateral(t, f);
  auto t2 = flip(t, f);
  std::pair<int, int> nf{std::min(b, d), std::max(b, d)};
  auto fail = [&](const std::string& what) {
    ++rep.failures;
    if (rep.witness.empty()) rep.witness = what;
  };
  ++rep.checks;
  if (polygon_monodromy(pts, t2, nf) != 1 / mf) fail("flipped diagonal");
  for (auto cd : diagonals(t)) {
    if (cd == f) continue;
    int e = polygon_pairing(t, f, cd);
    Q expect = polygon_monodromy(pts, t, cd) * qpow(mf, std::max(-e, 0)) * qpow(1 + mf, e);
    ++rep.checks;
    if (polygon_monodromy(pts, t2, cd) != expect)
      fail("diagonal (" + std::to_string(cd.first) + "," + std::to_string(cd.second) + ")");
  }
}

namespace {

void random_triangulation(int lo, int hi, std::mt19937_64& rng, Triangulation& t) {
  if (hi - lo < 2) return;
  std::uniform_int_distribution<int> pick(lo + 1, hi - 1);
  int apex = pick(rng);
  t.triangles.push_back({lo, apex, hi});
  random_triangulation(lo, apex, rng, t);
  random_triangulation(apex, hi, rng, t);
}

}  // namespace

SquareMoveReport square_move_trials(int configs, std::uint64_t seed, int m) {
  if (m < 4) throw std::invalid_argument("square moves need at least a quadrilateral");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-9, 9);
  SquareMoveReport rep;
  while (rep.configs < configs) {
    std::vector<Vec> pts(m, Vec(2));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    bool generic = true;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) generic = generic && wedge2(pts[i], pts[j]) != 0;
    if (!generic) continue;
    Triangulation t{m, {}};
    random_triangulation(0, m - 1, rng, t);
    auto ds = diagonals(t);
    std::uniform_int_distribution<size_t> pick(0, ds.size() - 1);
    int before = rep.degenerate;
    square_move_check(pts, t, ds[pick(rng)], rep);
    if (rep.degenerate == before) ++rep.configs;
  }
  return rep;
}

std::string conf_json(const FlagChain& c) {
  nlohmann::json j;
  j["schema"] = "conf.v1";
  j["n"] = c.n;
  j["letters"] = c.letters;
  std::vector<std::string> z;
  for (auto& v : c.z) z.push_back(to_string(v));
  j["z"] = z;
  j["seed"] = c.seed;
  j["convention"] = c.convention == TauConvention::Standard ? "standard" : "mirrored";
  return j.dump();
}

}  // namespace lf
