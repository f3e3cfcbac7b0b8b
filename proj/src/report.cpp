#include "lf/report.hpp"

#include <sstream>

#include <json.hpp>

#include "lf/flags.hpp"
#include "lf/pinch.hpp"
#include "lf/plabic.hpp"
#include "lf/weave.hpp"

namespace lf {

using nlohmann::json;

std::string report_separated(int k, int m) {
  auto r = weakly_separated_count(k, m);
  json j{{"schema", "count.v1"}, {"what", "separated"}, {"k", k}, {"m", m}, {"count", r.count},
         {"pure", r.pure}, {"size", r.expected_size}};
  return j.dump();
}

std::string report_plabic_orbit(int k, int m) {
  if (k < 1 || k >= m || m > 9) throw std::invalid_argument("need 1 <= k < m <= 9");
  auto g = plabic_from_collection(k, m, rectangle_collection(k, m));
  json j{{"schema", "count.v1"}, {"what", "plabic-orbit"}, {"k", k}, {"m", m}, {"count", plabic_orbit_count(g)},
         {"strand_permutation", strand_permutation(g)}};
  return j.dump();
}

std::string report_clusters(const BraidWord& beta, std::size_t budget) {
  auto g = exchange_graph(fence_seed(beta), -1, budget);
  json j{{"schema", "count.v1"}, {"what", "clusters"}, {"braid", beta.str()}, {"count", g.nodes.size()},
         {"samples", g.samples}, {"escalations", g.escalations}};
  return j.dump();
}

std::string report_pinch(const BraidWord& beta) {
  auto s0 = fence_seed(beta);
  auto c = pinch_cluster_count(beta, s0);
  long long ex = -1;
  bool subset = false;
  try {
    auto g = exchange_graph(s0, -1, 100000);
    std::set<std::string> fps;
    for (auto& n : g.nodes) fps.insert(n.fp);
    ex = static_cast<long long>(fps.size());
    subset = std::all_of(c.fingerprints.begin(), c.fingerprints.end(), [&](auto& f) { return fps.count(f) > 0; });
  } catch (const BudgetExceeded&) {
  }
  return pinch_json(beta, c, ex, subset);
}

std::string report_weave(const BraidWord& beta) { return weave_json(compile_fence_weave(beta)); }

namespace {

VerifyResult verdict(const std::string& check, const BraidWord* beta, int trials, int checks, int failures,
                     const std::string& witness) {
  json j{{"schema", "verify.v1"}, {"check", check}, {"trials", trials}, {"checks", checks}, {"failures", failures},
         {"result", failures == 0 && checks > 0 ? "PASS" : "FAIL"}};
  if (beta) j["braid"] = beta->str();
  if (!witness.empty()) j["witness"] = witness;
  return {j.dump(), failures == 0 && checks > 0};
}

}  // namespace

VerifyResult verify_minors(const BraidWord& beta, int trials, TauConvention conv) {
  auto sd = string_diagram(beta);
  int checks = 0, failures = 0;
  std::string witness;
  for (int t = 1; t <= trials; ++t) {
    auto c = sample_conf(beta, t, Genericity::Transports, conv);
    for (size_t a = 0; a < sd.strings.size(); ++a)
      for (int j = sd.first_slice(static_cast<int>(a)); j <= sd.last_slice(static_cast<int>(a)); ++j) {
        ++checks;
        int lv = sd.strings[a].level;
        if (merodromy_transport(c, j, lv) != principal_minor(c.M[j], lv)) {
          ++failures;
          if (witness.empty())
            witness = "chain seed " + std::to_string(t) + ", string " + std::to_string(a) + ", slice " + std::to_string(j);
        }
      }
  }
  return verdict("minors", &beta, trials, checks, failures, witness);
}

VerifyResult verify_duality(const BraidWord& beta, int trials, TauConvention conv) {
  auto w = compile_fence_weave(beta);
  auto rep = duality_report(w);
  auto eps = intersection_matrix(w);
  int checks = 4, failures = !rep.identity + !rep.slice_independent + !rep.chain_identity + !rep.skew;
  std::string witness = failures ? "pairing matrices" : "";
  for (int t = 1; t <= trials; ++t) {
    auto c = sample_conf(beta, t, Genericity::Transports, conv);
    auto a = initial_seed_values(c, w.strings);
    for (auto& g : cycle_basis(w).closed) {
      Q x = 1;
      for (size_t q = 0; q < a.size(); ++q) x *= qpow(a[q], eps[g.string][q]);
      ++checks;
      if (cycle_monodromy(c, g, w) != x) {
        ++failures;
        if (witness.empty()) witness = "chain seed " + std::to_string(t) + ", string " + std::to_string(g.string);
      }
    }
  }
  return verdict("duality", &beta, trials, checks, failures, witness);
}

VerifyResult verify_square_move(int trials, std::uint64_t seed) {
  auto r = square_move_trials(trials, seed);
  auto v = verdict("square-move", nullptr, trials, r.checks, r.failures, r.witness);
  auto j = json::parse(v.json);
  j["degenerate"] = r.degenerate;
  v.json = j.dump();
  return v;
}

std::string report_exchange_json(const Seed& root, int depth, std::size_t budget) {
  return exchange_json(exchange_graph(root, depth, budget));
}

std::string report_exchange_dot(const Seed& root, int depth, std::size_t budget) {
  return exchange_dot(exchange_graph(root, depth, budget));
}

std::string snapshot_json(const std::string& id, const Seed& s, bool can_undo) {
  json seed = json::parse(seed_json(s));
  json nodes = json::array(), arrows = json::array();
  for (int v = 0; v < s.size(); ++v) {
    json node{{"id", v}, {"name", seed["vertices"][v]["name"]}, {"mutable", bool(s.is_mutable[v])}};
    nodes.push_back(node);
    for (int u = 0; u < s.size(); ++u)
      if (s.eps[v][u] > 0) arrows.push_back({{"from", v}, {"to", u}, {"weight", s.eps[v][u]}});
  }
  json values = json::array();
  for (auto& v : seed["vertices"]) values.push_back({{"id", v["id"]}, {"A", v["A"]}, {"X", v["X"]}});
  json j{{"schema", "session.v1"}, {"id", id}, {"seed", seed}, {"quiver", {{"nodes", nodes}, {"arrows", arrows}}},
         {"values", values}, {"history", s.history}, {"can_undo", can_undo}};
  return j.dump();
}

std::string pretty(const std::string& json_line) {
  auto j = json::parse(json_line);
  std::ostringstream os;
  for (auto& [k, v] : j.items()) {
    if (v.is_string())
      os << k << ": " << v.get<std::string>() << "\n";
    else if (v.is_array() && v.size() > 16)
      os << k << ": [" << v.size() << " entries]\n";
    else if (v.is_object())
      os << k << ": {" << v.size() << " fields}\n";
    else
      os << k << ": " << v.dump() << "\n";
  }
  return os.str();
}

}  // namespace lf
