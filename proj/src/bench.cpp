#include "sldc/bench.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "sldc/errors.hpp"

namespace sldc {

LengthStats mc_expected_length(const CodeParams& params, std::uint64_t trials,
                               std::uint64_t master_seed) {
  if (trials < 1)
    throw std::invalid_argument("mc_expected_length: trials >= 1");

  Codebook codebook(params);
  LengthStats stats;
  stats.trials = trials;
  BigCount total = 0;
  BigCount total_sq = 0;
  std::uint64_t overflows = 0;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const SparseSeq x{params.n,
                      sample_subset(params.n, params.r,
                                    {master_seed, 0, SampleRole::Trial, trial})};
    std::uint64_t len = 0;
    try {
      len = encode(codebook, x).length;
    } catch (const SearchCapExceeded&) {
      ++overflows;
      continue;
    }
    total += len;
    total_sq += BigCount(len) * len;
    ++stats.histogram[len];
  }
  if (overflows > 0)
    throw SearchCapExceeded("mc_expected_length: " + std::to_string(overflows) +
                            " of " + std::to_string(trials) +
                            " trials exceeded the level-search cap");

  stats.min = stats.histogram.begin()->first;
  stats.max = stats.histogram.rbegin()->first;
  const double nt = static_cast<double>(trials);
  stats.mean = total.convert_to<double>() / nt;
  const double var = std::max(
      0.0, total_sq.convert_to<double>() / nt - stats.mean * stats.mean);
  stats.stddev = std::sqrt(var);
  stats.ci95_halfwidth = 1.96 * stats.stddev / std::sqrt(nt);
  return stats;
}

ScalingResult scaling_experiment(std::uint64_t r, std::uint64_t d,
                                 const std::vector<std::uint64_t>& n_grid,
                                 std::uint64_t trials,
                                 std::uint64_t master_seed) {
  if (n_grid.size() < 2)
    throw std::invalid_argument("scaling_experiment: need >= 2 grid points");
  if (!std::is_sorted(n_grid.begin(), n_grid.end()))
    throw std::invalid_argument("scaling_experiment: n grid must ascend");

  ScalingResult result;
  for (const std::uint64_t n : n_grid) {
    CodeParams params;
    params.n = n;
    params.r = r;
    params.d = d;
    params.master_seed = master_seed;
    const LengthStats stats = mc_expected_length(params, trials, master_seed);
    result.points.push_back({n, stats.mean});
  }

  // Least-squares slope of log2(mean) on log2(n).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(result.points.size());
  for (const ScalingPoint& p : result.points) {
    const double x = std::log2(static_cast<double>(p.n));
    const double y = std::log2(p.mean_length);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  result.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return result;
}

namespace {

// Next r-combination of [1..n] in lexicographic order; false at the end.
bool next_combination(std::vector<std::uint64_t>& comb, std::uint64_t n) {
  const std::size_t r = comb.size();
  for (std::size_t i = r; i-- > 0;) {
    if (comb[i] < n - (r - 1 - i)) {
      ++comb[i];
      for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

VerifyReport exhaustive_verify(const CodeParams& params) {
  const BigCount count = binom_exact(static_cast<std::int64_t>(params.n),
                                     static_cast<std::int64_t>(params.r));
  if (count > 1000000)
    throw std::invalid_argument(
        "exhaustive_verify: C(n,r) exceeds the 10^6 guard");

  Codebook codebook(params);
  VerifyReport report;
  std::set<std::pair<std::uint64_t, std::vector<std::uint64_t>>> seen;

  std::vector<std::uint64_t> support(params.r);
  for (std::uint64_t i = 0; i < params.r; ++i) support[i] = i + 1;

  bool more = true;
  while (more) {
    const SparseSeq x{params.n, support};
    const Codeword c = encode(codebook, x);
    ++report.sequences;

    if (!seen.insert({c.length, c.ones}).second) report.injective = false;

    // Level minimality: no smaller valid level may accept this support.
    for (std::uint64_t k = codebook.k_min(); k < c.length; ++k) {
      if (codebook.planned_size(k) < params.r) continue;
      if (level_accepts(*codebook.level(k), support)) {
        report.min_level_ok = false;
        break;
      }
    }

    const auto level = codebook.level(c.length);
    for (std::uint64_t j = 1; j <= params.n; ++j) {
      const auto [bit, trace] = decode_bit(codebook, c, j);
      ++report.queries;
      const bool expected =
          std::binary_search(support.begin(), support.end(), j);
      if (bit != expected) ++report.errors;

      const std::uint64_t probes = trace.positions.size();
      report.max_probes = std::max(report.max_probes, probes);
      const bool inside = level->contains(j);
      if (probes != (inside ? params.d : 0)) report.probe_budget_ok = false;

      // Non-adaptivity: the trace must equal the plan computed up front,
      // with no dependence on the codeword contents.
      const auto plan = codebook.probe_plan(j, c.length);
      const bool plan_matches =
          plan.has_value() ? trace.positions == *plan : trace.positions.empty();
      if (!plan_matches) report.non_adaptive_ok = false;
    }

    more = params.r > 0 && next_combination(support, params.n);
    if (params.r == 0) more = false;
  }
  return report;
}

}  // namespace sldc
