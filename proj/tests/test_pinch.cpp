#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "lf/pinch.hpp"

using namespace lf;

namespace {

PinchOrder identity_order(int k) {
  PinchOrder p(k);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

}  // namespace

TEST_CASE("orders are validated") {
  CHECK_NOTHROW(validate_order({2, 1, 3}, 3));
  CHECK_THROWS_AS(validate_order({1, 2}, 3), PinchError);
  CHECK_THROWS_AS(validate_order({1, 1, 3}, 3), PinchError);
  CHECK_THROWS_AS(validate_order({0, 1, 2}, 3), PinchError);
  auto s0 = fence_seed(parse_braid("s1^3"));
  CHECK_THROWS_AS(pinch_seed(parse_braid("s1^3"), {1, 2, 4}, s0), PinchError);
  CHECK_THROWS_AS(pinch_seed(parse_braid("s1^4"), {1, 2, 3, 4}, s0), PinchError);
}

TEST_CASE("swap rule on two strands") {
  CHECK(swap_allowed({1, 3, 2}, 0));
  CHECK_FALSE(swap_allowed({1, 2, 3}, 0));
  CHECK_FALSE(swap_allowed({1, 3, 2}, 1));
}

TEST_CASE("two-strand classes are Catalan and 132-avoiding") {
  for (int k = 0; k <= 7; ++k) {
    CHECK(two_braid_classes(k) == catalan(k));
    CHECK(count_132_avoiding(k) == catalan(k));
  }
  CHECK(catalan(5) == 42);
  CHECK_THROWS_AS(two_braid_classes(9), PinchError);
}

TEST_CASE("pinch seed is constant on classes") {
  for (int k = 2; k <= 6; ++k) {
    BraidWord beta{2, std::vector<int>(k, 1)};
    auto s0 = fence_seed(beta);
    std::map<PinchOrder, std::string> by_class;
    std::set<std::string> fps;
    auto p = identity_order(k);
    do {
      auto fp = fingerprint(pinch_seed(beta, p, s0));
      auto [it, fresh] = by_class.emplace(canonical_order(p), fp);
      CHECK(it->second == fp);
      fps.insert(fp);
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(by_class.size() == catalan(k));
    CHECK(fps.size() == catalan(k));
  }
}

TEST_CASE("small pinch seeds") {
  auto b2 = parse_braid("s1^2");
  auto s2 = fence_seed(b2);
  CHECK(seeds_equal(pinch_seed(b2, {1, 2}, s2), s2));
  CHECK(pinch_seed(b2, {1, 2}, s2).history.empty());
  auto swapped = pinch_seed(b2, {2, 1}, s2);
  CHECK(swapped.history == std::vector<int>{0});
  CHECK(seeds_equal(swapped, mutate_seed(s2, 0)));
  auto b3 = parse_braid("s1^3");
  auto c = pinch_cluster_count(b3, fence_seed(b3));
  CHECK(c.orders == 6);
  CHECK(c.clusters == 5);
}

TEST_CASE("two-strand pinch counts") {
  for (int k = 1; k <= 7; ++k) {
    BraidWord beta{2, std::vector<int>(k, 1)};
    auto s0 = fence_seed(beta);
    auto c = pinch_cluster_count(beta, s0);
    CHECK(c.clusters == catalan(k));
    auto g = exchange_graph(s0);
    std::set<std::string> all;
    for (auto& n : g.nodes) all.insert(n.fp);
    for (auto& fp : c.fingerprints) CHECK(all.count(fp) == 1);
  }
}

TEST_CASE("three-strand pinch counts inside the D4 exchange graph") {
  for (auto text : {"(s1 s2 s2)^2", "(s2 s1 s1)^2"}) {
    auto beta = parse_braid(text);
    auto s0 = fence_seed(beta);
    auto c = pinch_cluster_count(beta, s0);
    CHECK(c.clusters == 42);
    auto g = exchange_graph(s0);
    CHECK(g.nodes.size() == 50);
    std::set<std::string> all;
    for (auto& n : g.nodes) all.insert(n.fp);
    for (auto& fp : c.fingerprints) CHECK(all.count(fp) == 1);
  }
}

TEST_CASE("pinch json") {
  auto beta = parse_braid("s1^4");
  auto c = pinch_cluster_count(beta, fence_seed(beta));
  auto j = nlohmann::json::parse(pinch_json(beta, c, 14, true));
  CHECK(j["schema"] == "pinch.v1");
  CHECK(j["clusters"] == 14);
  CHECK(j["orders"] == 24);
  CHECK(j["classes"] == 14);
  CHECK(j["subset_of_exchange"] == true);
}

TEST_CASE("enumeration budget") {
  BraidWord beta{2, std::vector<int>(10, 1)};
  CHECK_THROWS_AS(pinch_cluster_count(beta, fence_seed(beta)), BudgetExceeded);
}
