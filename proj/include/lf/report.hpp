#pragma once

#include <cstdint>
#include <string>

#include "lf/braid.hpp"
#include "lf/cluster.hpp"
#include "lf/flags.hpp"

namespace lf {

// One JSON line per report; the CLI and the service both print these strings.

std::string report_separated(int k, int m);
std::string report_plabic_orbit(int k, int m);
std::string report_clusters(const BraidWord& beta, std::size_t budget = 100000);
std::string report_pinch(const BraidWord& beta);
std::string report_weave(const BraidWord& beta);

struct VerifyResult {
  std::string json;
  bool pass = false;
};
VerifyResult verify_minors(const BraidWord& beta, int trials, TauConvention conv = TauConvention::Standard);
VerifyResult verify_duality(const BraidWord& beta, int trials, TauConvention conv = TauConvention::Standard);
VerifyResult verify_square_move(int trials, std::uint64_t seed = 1);

std::string report_exchange_json(const Seed& root, int depth, std::size_t budget = 100000);
std::string report_exchange_dot(const Seed& root, int depth, std::size_t budget = 100000);

// Quiver, values and history of a seed, as served for sessions.
std::string snapshot_json(const std::string& id, const Seed& s, bool can_undo);

// "key: value" lines for --pretty.
std::string pretty(const std::string& json_line);

}  // namespace lf
