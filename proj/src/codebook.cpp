#include "sldc/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sldc/bounds.hpp"
#include "sldc/errors.hpp"

namespace sldc {

std::uint64_t default_k_max(std::uint64_t n, std::uint64_t r, std::uint64_t d) {
  if (r == 0) return 64;
  const double ub = upper_bound_nonadaptive(n, r, d);
  const double cap = 8.0 * std::ceil(ub);
  return std::max<std::uint64_t>(64, static_cast<std::uint64_t>(cap));
}

std::uint64_t effective_k_max(const CodeParams& p) {
  const std::uint64_t k = p.k_max != 0 ? p.k_max : default_k_max(p.n, p.r, p.d);
  if (k < min_level(p))
    throw std::domain_error("k_max below the smallest level r*d + 1");
  return k;
}

std::uint64_t level_size(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                         std::uint64_t k) {
  if (d < 1) throw std::domain_error("level_size: d must be >= 1");
  if (k < r * d + 1) throw std::domain_error("level_size: k < r*d + 1");
  if (r == 0) return 0;
  // floor( r * C(k,d) / ((r+1) * C(rd,d)) ), all exact.
  const BigCount num = BigCount(r) * binom_exact(static_cast<std::int64_t>(k),
                                                 static_cast<std::int64_t>(d));
  const BigCount den =
      BigCount(r + 1) * binom_exact(static_cast<std::int64_t>(r * d),
                                    static_cast<std::int64_t>(d));
  const BigCount size = num / den;
  if (size >= n) return n;
  return size.convert_to<std::uint64_t>();
}

bool LevelPlan::contains(std::uint64_t j) const {
  return std::binary_search(members.begin(), members.end(), j);
}

const std::vector<std::uint64_t>* LevelPlan::probe_set(std::uint64_t j) const {
  const auto it = std::lower_bound(members.begin(), members.end(), j);
  if (it == members.end() || *it != j) return nullptr;
  return &probe_sets[static_cast<std::size_t>(it - members.begin())];
}

LevelPlan build_level(const CodeParams& params, std::uint64_t k) {
  const std::uint64_t size = level_size(params.n, params.r, params.d, k);
  LevelPlan plan;
  plan.k = k;
  plan.members = sample_subset(
      params.n, size, {params.master_seed, k, SampleRole::LevelSet, 0});
  plan.probe_sets.reserve(plan.members.size());
  for (const std::uint64_t j : plan.members) {
    plan.probe_sets.push_back(sample_subset(
        k, params.d, {params.master_seed, k, SampleRole::ProbeSet, j}));
  }
  return plan;
}

Codebook::Codebook(CodeParams params)
    : params_(params), k_max_(effective_k_max(params)) {
  if (params_.r > params_.n)
    throw std::domain_error("Codebook: r exceeds n");
  if (params_.d < 1) throw std::domain_error("Codebook: d must be >= 1");
}

std::shared_ptr<const LevelPlan> Codebook::level(std::uint64_t k) const {
  {
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    const auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
  }
  const auto ov = overrides_.find(k);
  auto plan = std::make_shared<const LevelPlan>(
      ov != overrides_.end() ? ov->second : build_level(params_, k));
  std::lock_guard<std::mutex> lock(*cache_mutex_);
  const auto [it, inserted] = cache_.emplace(k, std::move(plan));
  return it->second;
}

std::uint64_t Codebook::planned_size(std::uint64_t k) const {
  const auto ov = overrides_.find(k);
  if (ov != overrides_.end()) return ov->second.members.size();
  return level_size(params_.n, params_.r, params_.d, k);
}

std::optional<std::vector<std::uint64_t>> Codebook::probe_plan(
    std::uint64_t j, std::uint64_t ell) const {
  if (j < 1 || j > params_.n)
    throw QueryOutOfRange("probe_plan: query index outside [1..n]");
  if (ell < k_min() || ell > k_max_)
    throw LengthOutOfRange("probe_plan: length is not a valid level");
  const auto plan = level(ell);
  const auto* probes = plan->probe_set(j);
  if (probes == nullptr) return std::nullopt;
  return *probes;
}

void Codebook::set_level_override(LevelPlan plan) {
  const std::uint64_t k = plan.k;
  overrides_[k] = std::move(plan);
  std::lock_guard<std::mutex> lock(*cache_mutex_);
  cache_.erase(k);
}

}  // namespace sldc
