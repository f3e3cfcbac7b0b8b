#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lf/braid.hpp"
#include "lf/rational.hpp"

namespace lf {

struct ClusterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cluster variable vanished at a sample point; redraw the sample chains.
struct ZeroValue : ClusterError {
  using ClusterError::ClusterError;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Seed {
  std::vector<std::vector<int>> eps;     // over all vertices
  std::vector<bool> is_mutable;
  std::vector<std::vector<Q>> samples;   // samples[s][v]
  std::vector<int> history;              // mutation word
  std::vector<std::string> names;
  std::vector<std::uint64_t> chain_seeds;  // rng seeds of the sample chains
  bool from_fence = false;
  BraidWord braid;  // when from_fence; lets the values be recomputed with more samples

  int size() const { return static_cast<int>(eps.size()); }
  int sample_count() const { return static_cast<int>(samples.size()); }
  std::vector<int> mutables() const;
};

// Strings of the fence of beta as vertices, A-values from `samples` chains
// drawn with rng seeds first_seed, first_seed + 1, ...
Seed fence_seed(const BraidWord& beta, int samples = 3, std::uint64_t first_seed = 1);

Seed mutate_seed(const Seed& s, int v);

// Sorted multiset of the mutable vertices' value vectors.
std::string fingerprint(const Seed& s);
std::string fingerprint_id(const std::string& fp);  // short hex digest
bool seeds_equal(const Seed& a, const Seed& b);
// Mutable part of eps with rows and columns ordered by value vectors.
std::string eps_class(const Seed& s);

// X_a = prod_c A_c^{eps[a][c]} per sample.
std::vector<Q> x_from_a(const Seed& s, int a);

// X'_k = X_k^{-1}, X'_j = X_j X_k^{[eps_jk]_+} (1 + X_k)^{eps_kj}.
struct XLawReport {
  int checks = 0;
  int failures = 0;
  std::string witness;
  bool ok() const { return failures == 0 && checks > 0; }
};
void check_x_law(const Seed& s, int k, XLawReport& rep);

struct ExchangeGraph {
  struct Node {
    std::string fp;
    std::string id;
    int depth;
    std::vector<int> word;  // mutation word from the root
  };
  struct Edge {
    int a, b;
    int vertex;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int samples = 0;
  bool complete = false;  // closure reached (no depth cutoff)
  int escalations = 0;
};

// Breadth-first closure under mutation. depth < 0 means unlimited. Throws
// BudgetExceeded past `budget` nodes. A fingerprint reached with a different
// eps class restarts with 5 samples; a vanishing value restarts with fresh
// chains (fence seeds only, at most 4 times).
ExchangeGraph exchange_graph(const Seed& root, int depth = -1, std::size_t budget = 100000);
std::size_t exchange_graph_count(const Seed& root, std::size_t budget = 100000);

// Fence seed recomputed with `samples` chains starting at rng seed
// first_seed, then the history replayed.
Seed resample(const Seed& s, int samples, std::uint64_t first_seed);

std::string seed_json(const Seed& s);
std::string exchange_json(const ExchangeGraph& g);
std::string exchange_dot(const ExchangeGraph& g);

}  // namespace lf
