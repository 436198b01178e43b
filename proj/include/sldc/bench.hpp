#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sldc/codec.hpp"

namespace sldc {

struct LengthStats {
  std::uint64_t trials = 0;
  double mean = 0.0;  // exact integer total / trials, converted last
  double stddev = 0.0;
  double ci95_halfwidth = 0.0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // length -> count
};

/// Estimate E[l] by trial-keyed uniform sampling of the source. Deterministic
/// given (params, master_seed). Throws SearchCapExceeded (with the overflow
/// count in the message) if any trial fails to encode.
LengthStats mc_expected_length(const CodeParams& params, std::uint64_t trials,
                               std::uint64_t master_seed);

struct ScalingPoint {
  std::uint64_t n = 0;
  double mean_length = 0.0;
};

struct ScalingResult {
  double slope = 0.0;  // least-squares slope of log2(mean) vs log2(n)
  std::vector<ScalingPoint> points;
};

/// Fixed (r, d), ascending n grid: fit the log-log growth exponent of the
/// measured mean length. Throws std::invalid_argument for grids of < 2 points.
ScalingResult scaling_experiment(std::uint64_t r, std::uint64_t d,
                                 const std::vector<std::uint64_t>& n_grid,
                                 std::uint64_t trials,
                                 std::uint64_t master_seed);

struct VerifyReport {
  std::uint64_t sequences = 0;
  std::uint64_t queries = 0;
  std::uint64_t errors = 0;       // decoded bit != source bit
  std::uint64_t max_probes = 0;
  bool probe_budget_ok = true;    // exactly d probes inside S_l, 0 outside
  bool non_adaptive_ok = true;    // trace positions match the probe plan
  bool injective = true;          // no two supports share (length, ones)
  bool min_level_ok = true;       // no smaller valid level accepts
};

/// Enumerate every r-subset of [n], encode, decode all n bits, and check
/// zero-error decoding, the probe budget, injectivity and level minimality.
/// Guard: refuses instances with C(n,r) > 10^6.
VerifyReport exhaustive_verify(const CodeParams& params);

}  // namespace sldc
