#include "lf/pinch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>

#include <json.hpp>

namespace lf {

void validate_order(const PinchOrder& sigma, int length) {
  if (static_cast<int>(sigma.size()) != length) throw PinchError("order length differs from the braid length");
  std::vector<bool> seen(length + 1);
  for (int p : sigma) {
    if (p < 1 || p > length || seen[p]) throw PinchError("order is not a permutation of the crossings");
    seen[p] = true;
  }
}

bool swap_allowed(const PinchOrder& sigma, int j) {
  int lo = std::min(sigma[j], sigma[j + 1]), hi = std::max(sigma[j], sigma[j + 1]);
  for (size_t t = j + 2; t < sigma.size(); ++t)
    if (lo < sigma[t] && sigma[t] < hi) return true;
  return false;
}

namespace {

std::vector<PinchOrder> class_of(const PinchOrder& sigma) {
  std::set<PinchOrder> seen{sigma};
  std::vector<PinchOrder> stack{sigma}, out;
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (size_t j = 0; j + 1 < cur.size(); ++j)
      if (swap_allowed(cur, static_cast<int>(j))) {
        auto nxt = cur;
        std::swap(nxt[j], nxt[j + 1]);
        if (seen.insert(nxt).second) stack.push_back(nxt);
      }
  }
  return out;
}

}  // namespace

std::uint64_t two_braid_classes(int k) {
  if (k < 0 || k > 8) throw PinchError("two_braid_classes supports 0 <= k <= 8");
  PinchOrder p(k);
  std::iota(p.begin(), p.end(), 1);
  std::set<PinchOrder> assigned;
  std::uint64_t classes = 0;
  do {
    if (assigned.count(p)) continue;
    ++classes;
    for (auto& q : class_of(p)) assigned.insert(q);
  } while (std::next_permutation(p.begin(), p.end()));
  return classes;
}

PinchOrder canonical_order(const PinchOrder& sigma) {
  auto cls = class_of(sigma);
  return *std::min_element(cls.begin(), cls.end());
}

std::uint64_t count_132_avoiding(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  std::uint64_t count = 0;
  do {
    bool has = false;
    for (int i = 0; i < k && !has; ++i)
      for (int j = i + 1; j < k && !has; ++j)
        for (int l = j + 1; l < k && !has; ++l) has = p[i] < p[l] && p[l] < p[j];
    count += !has;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

struct PinchState {
  std::vector<int> order;  // crossing positions, pinched prefix first
  std::vector<int> slot;   // live vertex attached to each place of `order`
  Seed seed;
};

// Moves crossing `target` left into place idx.
void pinch_step(const std::vector<int>& letters, PinchState& st, int idx, int target) {
  int j = static_cast<int>(std::find(st.order.begin(), st.order.end(), target) - st.order.begin());
  for (; j > idx; --j) {
    int b = st.order[j], a = st.order[j - 1];
    int ia = letters[a - 1], ib = letters[b - 1];
    int lo = std::min(a, b), hi = std::max(a, b);
    bool blocked = false;
    for (size_t q = j + 1; q < st.order.size(); ++q) {
      int c = st.order[q];
      blocked = blocked || (letters[c - 1] == ia && lo < c && c < hi);
    }
    if (ia == ib && !blocked) {
      int v = st.slot[j - 1];
      if (!st.seed.is_mutable[v])
        throw PinchError("undecidable configuration: swapping crossings " + std::to_string(a) + " and " +
                         std::to_string(b) + " reaches frozen vertex " + std::to_string(v));
      st.seed = mutate_seed(st.seed, v);
    } else {
      std::swap(st.slot[j - 1], st.slot[j]);
    }
    std::swap(st.order[j - 1], st.order[j]);
  }
}

PinchState initial_state(const BraidWord& beta, const Seed& s0) {
  if (s0.size() != beta.length()) throw PinchError("seed is not the fence seed of this braid");
  PinchState st;
  st.order.resize(beta.length());
  std::iota(st.order.begin(), st.order.end(), 1);
  st.slot.resize(beta.length());
  std::iota(st.slot.begin(), st.slot.end(), 0);
  st.seed = s0;
  return st;
}

void enumerate(const std::vector<int>& letters, const PinchState& st, int idx, PinchCount& out) {
  int l = static_cast<int>(letters.size());
  if (idx == l) {
    ++out.orders;
    out.fingerprints.insert(fingerprint(st.seed));
    return;
  }
  for (int q = idx; q < l; ++q) {
    PinchState next = st;
    pinch_step(letters, next, idx, st.order[q]);
    enumerate(letters, next, idx + 1, out);
  }
}

}  // namespace

Seed pinch_seed(const BraidWord& beta, const PinchOrder& sigma, const Seed& s0) {
  validate_order(sigma, beta.length());
  auto st = initial_state(beta, s0);
  for (int idx = 0; idx < beta.length(); ++idx) pinch_step(beta.letters, st, idx, sigma[idx]);
  return st.seed;
}

PinchCount pinch_cluster_count(const BraidWord& beta, const Seed& s0) {
  if (beta.length() > 9) throw BudgetExceeded("enumeration budget exceeded: at most 9 crossings");
  auto t0 = std::chrono::steady_clock::now();
  PinchCount out;
  enumerate(beta.letters, initial_state(beta, s0), 0, out);
  out.clusters = out.fingerprints.size();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string pinch_json(const BraidWord& beta, const PinchCount& c, long long exchange_count, bool subset) {
  nlohmann::json j;
  j["schema"] = "pinch.v1";
  j["braid"] = beta.str();
  j["orders"] = c.orders;
  j["clusters"] = c.clusters;
  j["seconds"] = std::round(c.seconds * 1000) / 1000;
  if (exchange_count >= 0) {
    j["exchange_clusters"] = exchange_count;
    j["subset_of_exchange"] = subset;
  }
  bool two_braid = std::all_of(beta.letters.begin(), beta.letters.end(), [](int a) { return a == 1; });
  if (two_braid && beta.length() <= 8) j["classes"] = two_braid_classes(beta.length());
  return j.dump();
}

}  // namespace lf
