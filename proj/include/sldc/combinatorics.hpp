#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sldc {

// Arbitrary-precision count; exact for every binomial that shows up in the
// bound comparisons.
using BigCount = boost::multiprecision::cpp_int;

/// C(n, k), exact. Returns 0 when k < 0 or k > n.
BigCount binom_exact(std::int64_t n, std::int64_t k);

/// ln C(n, k) via log-gamma. Throws std::domain_error unless 0 <= k <= n.
double log_binom(std::int64_t n, std::int64_t k);

/// Natural log of a positive BigCount.
double log_big(const BigCount& x);

enum class SampleRole : std::uint64_t {
  LevelSet = 0,  // drawing S_k for a level
  ProbeSet = 1,  // drawing T_{j,k}; index carries j
  Trial = 2,     // per-trial source sampling; index carries the trial number
};

// Domain-separated key for the counter-based PRF. Distinct tuples give
// independent-looking 64-bit streams.
struct SampleKey {
  std::uint64_t master_seed = 0;
  std::uint64_t level = 0;
  SampleRole role = SampleRole::LevelSet;
  std::uint64_t index = 0;
};

// Counter-mode 64-bit PRF: the packed key words and the counter are absorbed
// one at a time through the SplitMix64 finalizer. Fixed by scheme_version 1.
std::uint64_t prf64(const SampleKey& key, std::uint64_t counter);

// Stateful uniform-integer source over one PRF stream. Draws in [1..bound]
// are exactly uniform: 64-bit words >= bound * floor(2^64 / bound) are
// rejected, so results are bit-exact across platforms.
class PrfStream {
 public:
  explicit PrfStream(const SampleKey& key) : key_(key) {}

  std::uint64_t next_word() { return prf64(key_, counter_++); }

  /// Uniform draw from [1..bound], bound >= 1.
  std::uint64_t uniform(std::uint64_t bound);

 private:
  SampleKey key_;
  std::uint64_t counter_ = 0;
};

/// Uniform size-m subset of [1..N] by Floyd's algorithm, sorted ascending.
/// Deterministic given (N, m, key). Throws std::invalid_argument if m > N.
std::vector<std::uint64_t> sample_subset(std::uint64_t universe_size,
                                         std::uint64_t subset_size,
                                         const SampleKey& key);

}  // namespace sldc
