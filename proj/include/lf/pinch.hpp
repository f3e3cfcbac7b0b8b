#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lf/braid.hpp"
#include "lf/cluster.hpp"

namespace lf {

struct PinchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sigma[t] = crossing position (1-based) pinched at step t.
using PinchOrder = std::vector<int>;

void validate_order(const PinchOrder& sigma, int length);

// Two orders of s1^k are equivalent when they differ by swaps of consecutive
// steps whose positions have a later-pinched crossing strictly between them.
bool swap_allowed(const PinchOrder& sigma, int j);
std::uint64_t two_braid_classes(int k);
// Lexicographically least order in the class of sigma.
PinchOrder canonical_order(const PinchOrder& sigma);
std::uint64_t count_132_avoiding(int k);
std::uint64_t catalan(int k);

// Bubble-sorts the identity order into sigma. Each adjacent swap of pinches
// a (left) and b (right) either mutates a vertex or exchanges the two live
// slots; see README.
Seed pinch_seed(const BraidWord& beta, const PinchOrder& sigma, const Seed& s0);

struct PinchCount {
  std::uint64_t orders = 0;
  std::size_t clusters = 0;
  std::set<std::string> fingerprints;
  double seconds = 0;
};
// Distinct clusters over all orders (length at most 9).
PinchCount pinch_cluster_count(const BraidWord& beta, const Seed& s0);

std::string pinch_json(const BraidWord& beta, const PinchCount& c, long long exchange_count, bool subset);

}  // namespace lf
