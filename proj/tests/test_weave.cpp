#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <json.hpp>

#include "lf/weave.hpp"

using namespace lf;

namespace {

BraidWord random_braid(std::mt19937& rng, int n, int len) {
  BraidWord b;
  b.n = n;
  std::uniform_int_distribution<int> d(1, n - 1);
  for (int i = 0; i < len; ++i) b.letters.push_back(d(rng));
  return b;
}

}  // namespace

TEST_CASE("string diagram") {
  auto sd = string_diagram(parse_braid("s1 s2 s1 s2 s1"));
  REQUIRE(sd.strings.size() == 5);
  CHECK(sd.strings[0].level == 1);
  CHECK(sd.strings[0].start == 1);
  CHECK(sd.strings[0].end == 3);
  CHECK(sd.strings[4].end == 0);
  CHECK(sd.closed_indices() == std::vector<int>{0, 1, 2});
  CHECK(sd.frozen_indices() == std::vector<int>{3, 4});
  CHECK(sd.first_slice(0) == 1);
  CHECK(sd.last_slice(0) == 2);
  CHECK(sd.last_slice(4) == 5);
}

TEST_CASE("string pairing") {
  StringSeg a{1, 1, 3}, b{1, 3, 5}, c{2, 2, 4}, d{3, 1, 6};
  CHECK(string_pairing(a, b) == -1);
  CHECK(string_pairing(b, a) == 1);
  CHECK(string_pairing(a, c) == -string_pairing(c, a));
  CHECK(string_pairing(a, c) != 0);
  CHECK(string_pairing(a, d) == 0);
  CHECK(string_pairing(a, a) == 0);
}

TEST_CASE("pairing on two strands is a path") {
  for (int k = 2; k <= 7; ++k) {
    std::vector<int> letters(k, 1);
    auto w = compile_fence_weave(BraidWord{2, letters});
    auto eps = intersection_matrix(w);
    auto closed = w.strings.closed_indices();
    REQUIRE(static_cast<int>(closed.size()) == k - 1);
    for (size_t i = 0; i < closed.size(); ++i)
      for (size_t j = 0; j < closed.size(); ++j) {
        int e = eps[closed[i]][closed[j]];
        if (i + 1 == j || j + 1 == i)
          CHECK(std::abs(e) == 1);
        else
          CHECK(e == 0);
      }
  }
}

TEST_CASE("weave vertex counts") {
  auto w = compile_fence_weave(parse_braid("s1^3"));
  CHECK(w.trivalent_count() == 3);
  CHECK(w.hexavalent_count() == 0);
  CHECK(w.tetravalent_count() == 0);
  auto w3 = compile_fence_weave(parse_braid("(s1 s2)^3"));
  CHECK(w3.trivalent_count() == 6);
  CHECK(w3.hexavalent_count() > 0);
  CHECK(w3.tetravalent_count() == 0);
  auto w4 = compile_fence_weave(parse_braid("s1 s2 s3 s1"));
  CHECK(w4.trivalent_count() == 4);
  CHECK(w4.slice == half_twist_word(4));
}

TEST_CASE("empty braid") {
  auto w = compile_fence_weave(BraidWord{3, {}});
  CHECK(w.trivalent_count() == 0);
  CHECK(w.strings.strings.empty());
  CHECK(boundary_word(w).matches);
  CHECK(w.edges_across_slice(0) == 3);
}

TEST_CASE("boundary word is the braid followed by two half twists") {
  for (auto text : {"s1^3", "(s1 s2)^2", "(s1 s2)^3", "s1 s2 s2 s1 s2 s2", "s2 s1 s3 s2 s1"}) {
    auto w = compile_fence_weave(parse_braid(text));
    auto bw = boundary_word(w);
    CHECK(bw.matches);
    CHECK(static_cast<int>(bw.word.size()) == w.beta.length() + w.n * (w.n - 1));
  }
}

TEST_CASE("each slice meets the half twist") {
  for (auto text : {"s1^3", "(s1 s2)^3", "s1 s2 s3 s2 s1 s3"}) {
    auto w = compile_fence_weave(parse_braid(text));
    for (int j = 0; j <= w.beta.length(); ++j) CHECK(w.edges_across_slice(j) == w.n * (w.n - 1) / 2);
  }
}

TEST_CASE("duality of relative and closed cycles") {
  for (auto text : {"s1^3", "(s1 s2)^2", "(s1 s2)^3", "s1 s2 s2 s1 s2 s2", "s2 s1 s1 s2 s1 s1"}) {
    auto w = compile_fence_weave(parse_braid(text));
    auto rep = duality_report(w);
    CHECK(rep.identity);
    CHECK(rep.slice_independent);
    CHECK(rep.chain_identity);
    CHECK(rep.skew);
    auto basis = cycle_basis(w);
    CHECK(basis.closed.size() == w.strings.closed_indices().size());
    CHECK(basis.relative.size() == w.strings.strings.size());
    auto m = relative_pairing_matrix(w);
    auto closed = w.strings.closed_indices();
    for (size_t a = 0; a < closed.size(); ++a)
      for (size_t c = 0; c < closed.size(); ++c) CHECK(m[closed[a]][c] == (a == c ? 1 : 0));
  }
}

TEST_CASE("random braids") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 3;
    auto beta = random_braid(rng, n, 1 + trial % 7);
    auto w = compile_fence_weave(beta);
    CAPTURE(beta.str());
    CHECK(w.trivalent_count() == beta.length());
    CHECK(boundary_word(w).matches);
    auto eps = intersection_matrix(w);
    for (size_t a = 0; a < eps.size(); ++a)
      for (size_t b = 0; b < eps.size(); ++b) CHECK(eps[a][b] == -eps[b][a]);
    auto rep = duality_report(w);
    CHECK(rep.identity);
    CHECK(rep.chain_identity);
    for (int j = 0; j <= beta.length(); ++j) CHECK(w.edges_across_slice(j) == n * (n - 1) / 2);
  }
}

TEST_CASE("triangulation weaves") {
  auto pent = triangulation_weave(fan_triangulation(5));
  CHECK(pent.trivalent == 3);
  CHECK(pent.legs == 5);
  CHECK(pent.is_path());
  auto tri = triangulation_weave(fan_triangulation(3));
  CHECK(tri.trivalent == 1);
  CHECK(tri.edges.empty());
  auto hex = triangulation_weave(zigzag_triangulation(6));
  CHECK(hex.trivalent == 4);
  CHECK(hex.edges.size() == 3);
  CHECK(hex.is_path());
  Triangulation bad{5, {{0, 1, 2}, {0, 2, 3}, {1, 3, 4}}};
  CHECK_THROWS(validate_triangulation(bad));
  Triangulation short_one{5, {{0, 1, 2}, {0, 2, 3}}};
  CHECK_THROWS(validate_triangulation(short_one));
}

TEST_CASE("weave exports") {
  auto w = compile_fence_weave(parse_braid("(s1 s2)^2"));
  auto j = nlohmann::json::parse(weave_json(w));
  CHECK(j["schema"] == "weave.v1");
  CHECK(j["boundary_word"].size() == boundary_word(w).word.size());
  auto s = nlohmann::json::parse(weave_svgdata(w));
  CHECK(s["vertices"].size() == w.vertices.size());
  CHECK(s["edges"].size() == w.edges.size());
  CHECK(weave_svg(w).find("<svg") != std::string::npos);
}
