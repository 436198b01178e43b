#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "sldc/combinatorics.hpp"

namespace sldc {

// Identifies one codebook: the (n, r, d) tuple plus the master seed, the
// encoder's level-search cap and the scheme version that pins the sampler.
struct CodeParams {
  std::uint64_t n = 0;     // sequence length, bits
  std::uint64_t r = 0;     // sparsity: number of ones
  std::uint64_t d = 1;     // probe budget per query
  std::uint64_t master_seed = 0;
  std::uint64_t k_max = 0;  // 0: use default_k_max
  std::uint32_t scheme_version = 1;
};

/// Smallest candidate length, r*d + 1.
inline std::uint64_t min_level(const CodeParams& p) { return p.r * p.d + 1; }

/// Default search cap: max(64, 8 * ceil(nonadaptive upper bound)).
std::uint64_t default_k_max(std::uint64_t n, std::uint64_t r, std::uint64_t d);

/// k_max with the default resolved.
std::uint64_t effective_k_max(const CodeParams& p);

/// |S_k| = min(n, floor((r/(r+1)) * C(k,d)/C(rd,d))), exact rational
/// arithmetic before the floor. Throws std::domain_error if k < r*d + 1.
std::uint64_t level_size(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                         std::uint64_t k);

// The per-length codebook material: the index set S_k and one size-d probe
// set T_{j,k} per member j. members and probe_sets are parallel arrays.
struct LevelPlan {
  std::uint64_t k = 0;
  std::vector<std::uint64_t> members;  // S_k, sorted
  std::vector<std::vector<std::uint64_t>> probe_sets;

  bool contains(std::uint64_t j) const;
  /// T_{j,k}, or nullptr when j is not in S_k.
  const std::vector<std::uint64_t>* probe_set(std::uint64_t j) const;
};

/// Derive the plan for level k from the seed:
/// S_k = sample_subset(n, level_size, key(seed, k, LevelSet, 0)) and
/// T_{j,k} = sample_subset(k, d, key(seed, k, ProbeSet, j)) for each j in S_k.
LevelPlan build_level(const CodeParams& params, std::uint64_t k);

// Shared view of the codebook for encoder and decoder. Levels are built on
// demand and cached; the cache fill is idempotent, so concurrent readers see
// each level as if it had been built exactly once. Tests may inject explicit
// plans through set_level_override (the golden-plan hook).
class Codebook {
 public:
  explicit Codebook(CodeParams params);

  const CodeParams& params() const { return params_; }
  std::uint64_t k_min() const { return min_level(params_); }
  std::uint64_t k_max() const { return k_max_; }

  std::shared_ptr<const LevelPlan> level(std::uint64_t k) const;

  /// |S_k| without building probe sets; used by the encoder's C1 pre-check.
  std::uint64_t planned_size(std::uint64_t k) const;

  /// Probe positions for query j at codeword length ell, or nullopt when
  /// j lies outside S_ell (the decoder then answers 0 without probing).
  /// Depends only on (params, j, ell): the non-adaptivity contract.
  std::optional<std::vector<std::uint64_t>> probe_plan(std::uint64_t j,
                                                       std::uint64_t ell) const;

  void set_level_override(LevelPlan plan);

  Codebook(Codebook&&) = default;
  Codebook& operator=(Codebook&&) = default;

 private:
  CodeParams params_;
  std::uint64_t k_max_;
  std::map<std::uint64_t, LevelPlan> overrides_;
  mutable std::unique_ptr<std::mutex> cache_mutex_ =
      std::make_unique<std::mutex>();
  mutable std::map<std::uint64_t, std::shared_ptr<const LevelPlan>> cache_;
};

}  // namespace sldc
