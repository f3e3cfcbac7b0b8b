#include "lf/cluster.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "lf/flags.hpp"
#include "lf/weave.hpp"

namespace lf {

std::vector<int> Seed::mutables() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (is_mutable[v]) out.push_back(v);
  return out;
}

Seed fence_seed(const BraidWord& beta, int samples, std::uint64_t first_seed) {
  if (samples < 1) throw std::invalid_argument("at least one sample chain required");
  auto w = compile_fence_weave(beta);
  Seed s;
  s.eps = intersection_matrix(w);
  for (auto& st : w.strings.strings) {
    s.is_mutable.push_back(st.closed());
    s.names.push_back(std::to_string(st.level) + ":[" + std::to_string(st.start) + "," +
                      (st.closed() ? std::to_string(st.end) : std::string()) + ")");
  }
  for (int k = 0; k < samples; ++k) {
    auto c = sample_conf(beta, first_seed + k);
    s.samples.push_back(initial_seed_values(c, w.strings));
    s.chain_seeds.push_back(first_seed + k);
  }
  s.from_fence = true;
  s.braid = beta;
  return s;
}

Seed mutate_seed(const Seed& s, int k) {
  if (k < 0 || k >= s.size()) throw ClusterError("no vertex " + std::to_string(k));
  if (!s.is_mutable[k]) throw ClusterError("vertex " + std::to_string(k) + " is frozen");
  Seed t = s;
  int n = s.size();
  for (size_t q = 0; q < s.samples.size(); ++q) {
    auto& a = s.samples[q];
    if (a[k] == 0) throw ZeroValue("exchange denominator vanishes");
    Q pos = 1, neg = 1;
    for (int u = 0; u < n; ++u) {
      int e = s.eps[u][k];
      if (e > 0) pos *= qpow(a[u], e);
      if (e < 0) neg *= qpow(a[u], -e);
    }
    t.samples[q][k] = (pos + neg) / a[k];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int eik = s.eps[i][k], ekj = s.eps[k][j];
      t.eps[i][j] = (i == k || j == k) ? -s.eps[i][j] : s.eps[i][j] + (std::abs(eik) * ekj + eik * std::abs(ekj)) / 2;
    }
  t.history.push_back(k);
  return t;
}

namespace {

std::vector<std::string> value_keys(const Seed& s) {
  std::vector<std::string> out;
  for (int v : s.mutables()) {
    std::string key;
    for (auto& smp : s.samples) key += to_string(smp[v]) + ",";
    out.push_back(std::move(key));
  }
  return out;
}

}  // namespace

std::string fingerprint(const Seed& s) {
  auto keys = value_keys(s);
  std::sort(keys.begin(), keys.end());
  std::string fp;
  for (auto& k : keys) fp += k + ";";
  return fp;
}

std::string fingerprint_id(const std::string& fp) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << std::hash<std::string>{}(fp);
  return os.str();
}

bool seeds_equal(const Seed& a, const Seed& b) { return fingerprint(a) == fingerprint(b); }

std::string eps_class(const Seed& s) {
  auto mut = s.mutables();
  auto keys = value_keys(s);
  std::vector<int> order(mut.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return keys[x] < keys[y]; });
  std::string out;
  for (int x : order) {
    for (int y : order) out += std::to_string(s.eps[mut[x]][mut[y]]) + ",";
    out += ";";
  }
  return out;
}

std::vector<Q> x_from_a(const Seed& s, int a) {
  std::vector<Q> out;
  for (auto& smp : s.samples) {
    Q x = 1;
    for (int c = 0; c < s.size(); ++c) x *= qpow(smp[c], s.eps[a][c]);
    out.push_back(x);
  }
  return out;
}

void check_x_law(const Seed& s, int k, XLawReport& rep) {
  auto t = mutate_seed(s, k);
  auto xk = x_from_a(s, k);
  for (int j : s.mutables()) {
    auto before = x_from_a(s, j), after = x_from_a(t, j);
    for (size_t q = 0; q < xk.size(); ++q) {
      Q expect = j == k ? Q(1 / xk[q]) : Q(before[q] * qpow(xk[q], std::max(s.eps[j][k], 0)) * qpow(1 + xk[q], s.eps[k][j]));
      ++rep.checks;
      if (after[q] != expect) {
        ++rep.failures;
        if (rep.witness.empty())
          rep.witness = "mutation at " + std::to_string(k) + ", vertex " + std::to_string(j) + ", sample " + std::to_string(q);
      }
    }
  }
}

Seed resample(const Seed& s, int samples, std::uint64_t first_seed) {
  if (!s.from_fence) throw ClusterError("seed values cannot be recomputed");
  Seed t = fence_seed(s.braid, samples, first_seed);
  for (int v : s.history) t = mutate_seed(t, v);
  return t;
}

namespace {

struct Collision {};

ExchangeGraph explore(const Seed& root, int depth, std::size_t budget) {
  ExchangeGraph g;
  g.samples = root.sample_count();
  std::unordered_map<std::string, int> index;
  std::vector<std::string> classes;
  std::deque<std::pair<Seed, int>> queue;
  std::set<std::pair<int, int>> edge_keys;
  auto add = [&](const Seed& s, int d, std::vector<int> word) {
    auto fp = fingerprint(s);
    auto it = index.find(fp);
    if (it != index.end()) {
      if (classes[it->second] != eps_class(s)) throw Collision{};
      return it->second;
    }
    if (g.nodes.size() >= budget)
      throw BudgetExceeded("exchange graph exceeds " + std::to_string(budget) + " nodes (infinite type suspected)");
    int id = static_cast<int>(g.nodes.size());
    index.emplace(fp, id);
    classes.push_back(eps_class(s));
    g.nodes.push_back({fp, fingerprint_id(fp), d, std::move(word)});
    queue.push_back({s, id});
    return id;
  };
  Seed r = root;
  r.history.clear();
  add(r, 0, {});
  bool cut = false;
  while (!queue.empty()) {
    auto [s, id] = std::move(queue.front());
    queue.pop_front();
    int d = g.nodes[id].depth;
    if (depth >= 0 && d >= depth) {
      cut = true;
      continue;
    }
    for (int k : s.mutables()) {
      auto t = mutate_seed(s, k);
      auto word = g.nodes[id].word;
      word.push_back(k);
      int to = add(t, d + 1, std::move(word));
      if (edge_keys.insert({std::min(id, to), std::max(id, to)}).second) g.edges.push_back({id, to, k});
    }
  }
  g.complete = !cut;
  return g;
}

}  // namespace

ExchangeGraph exchange_graph(const Seed& root, int depth, std::size_t budget) {
  Seed cur = root;
  int escalations = 0;
  for (int redraw = 0;; ++redraw) {
    try {
      auto g = explore(cur, depth, budget);
      g.escalations = escalations;
      return g;
    } catch (const Collision&) {
      if (cur.sample_count() >= 5) throw ClusterError("fingerprint collision persists at 5 samples");
      cur = resample(cur, 5, cur.chain_seeds.front());
      ++escalations;
    } catch (const ZeroValue&) {
      if (!cur.from_fence || redraw >= 4) throw;
      cur = resample(cur, cur.sample_count(), cur.chain_seeds.front() + 7919);
    }
  }
}

std::size_t exchange_graph_count(const Seed& root, std::size_t budget) {
  return exchange_graph(root, -1, budget).nodes.size();
}

std::string seed_json(const Seed& s) {
  nlohmann::json j;
  j["schema"] = "seed.v1";
  if (s.from_fence) {
    j["braid"] = s.braid.str();
    j["n"] = s.braid.n;
  }
  nlohmann::json vs = nlohmann::json::array();
  for (int v = 0; v < s.size(); ++v) {
    nlohmann::json a = nlohmann::json::array(), x = nlohmann::json::array();
    for (auto& smp : s.samples) a.push_back(to_string(smp[v]));
    for (auto& q : x_from_a(s, v)) x.push_back(to_string(q));
    vs.push_back({{"id", v}, {"name", v < static_cast<int>(s.names.size()) ? s.names[v] : std::to_string(v)},
                  {"mutable", bool(s.is_mutable[v])}, {"A", a}, {"X", x}});
  }
  j["vertices"] = vs;
  j["epsilon"] = s.eps;
  j["history"] = s.history;
  j["chain_seeds"] = s.chain_seeds;
  j["fingerprint"] = fingerprint_id(fingerprint(s));
  return j.dump();
}

std::string exchange_json(const ExchangeGraph& g) {
  nlohmann::json j;
  j["schema"] = "exchange.v1";
  j["samples"] = g.samples;
  j["complete"] = g.complete;
  j["count"] = g.nodes.size();
  nlohmann::json ns = nlohmann::json::array(), es = nlohmann::json::array();
  for (auto& n : g.nodes) ns.push_back({{"id", n.id}, {"depth", n.depth}, {"word", n.word}});
  for (auto& e : g.edges) es.push_back({{"from", g.nodes[e.a].id}, {"to", g.nodes[e.b].id}, {"vertex", e.vertex}});
  j["nodes"] = ns;
  j["edges"] = es;
  return j.dump();
}

std::string exchange_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (auto& n : g.nodes) os << "  \"" << n.id << "\" [label=\"" << n.id.substr(0, 6) << "\"];\n";
  for (auto& e : g.edges)
    if (e.a != e.b) os << "  \"" << g.nodes[e.a].id << "\" -- \"" << g.nodes[e.b].id << "\" [label=\"" << e.vertex << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace lf
