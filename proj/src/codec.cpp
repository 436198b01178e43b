#include "sldc/codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sldc/errors.hpp"

namespace sldc {

bool Codeword::bit(std::uint64_t pos) const {
  return std::binary_search(ones.begin(), ones.end(), pos);
}

bool level_accepts(const LevelPlan& plan, std::span<const std::uint64_t> support) {
  // C1: support contained in S_k.
  for (const std::uint64_t i : support)
    if (!plan.contains(i)) return false;

  // C2: for every j in S_k outside the support, T_{j,k} must stick out of
  // the union of the support's probe sets.
  std::vector<char> covered(plan.k + 1, 0);
  for (const std::uint64_t i : support)
    for (const std::uint64_t pos : *plan.probe_set(i)) covered[pos] = 1;

  for (std::size_t idx = 0; idx < plan.members.size(); ++idx) {
    const std::uint64_t j = plan.members[idx];
    if (std::binary_search(support.begin(), support.end(), j)) continue;
    bool escapes = false;
    for (const std::uint64_t pos : plan.probe_sets[idx]) {
      if (!covered[pos]) {
        escapes = true;
        break;
      }
    }
    if (!escapes) return false;
  }
  return true;
}

Codeword encode(const Codebook& codebook, const SparseSeq& x) {
  const CodeParams& p = codebook.params();
  if (x.n != p.n || x.support.size() != p.r)
    throw std::invalid_argument("encode: sequence does not match params");

  for (std::uint64_t k = codebook.k_min(); k <= codebook.k_max(); ++k) {
    if (codebook.planned_size(k) < p.r) continue;  // C1 cannot hold
    const auto plan = codebook.level(k);
    if (!level_accepts(*plan, x.support)) continue;

    std::vector<std::uint64_t> ones;
    for (const std::uint64_t i : x.support) {
      const auto& probes = *plan->probe_set(i);
      ones.insert(ones.end(), probes.begin(), probes.end());
    }
    std::sort(ones.begin(), ones.end());
    ones.erase(std::unique(ones.begin(), ones.end()), ones.end());
    return Codeword{k, std::move(ones)};
  }
  throw SearchCapExceeded(
      "encode: no accepting level up to k_max = " +
      std::to_string(codebook.k_max()) +
      "; retry with a larger k_max or a different master seed");
}

std::pair<bool, ProbeTrace> decode_bit(const Codebook& codebook,
                                       const Codeword& c, std::uint64_t j) {
  ProbeTrace trace;
  trace.query = j;
  trace.length = c.length;
  const auto plan = codebook.probe_plan(j, c.length);
  if (!plan.has_value()) {
    trace.decoded = false;
    return {false, std::move(trace)};
  }
  bool all_set = true;
  trace.positions = *plan;
  trace.values.reserve(trace.positions.size());
  for (const std::uint64_t pos : trace.positions) {
    const bool value = c.bit(pos);
    trace.values.push_back(value);
    all_set = all_set && value;
  }
  trace.decoded = all_set;
  return {all_set, std::move(trace)};
}

SparseSeq decode_full(const Codebook& codebook, const Codeword& c) {
  const CodeParams& p = codebook.params();
  if (c.length < codebook.k_min() || c.length > codebook.k_max())
    throw LengthOutOfRange("decode_full: codeword length is not a valid level");

  // Only members of S_l can decode to 1; everything else is 0 by definition.
  const auto plan = codebook.level(c.length);
  SparseSeq x;
  x.n = p.n;
  for (const std::uint64_t j : plan->members)
    if (decode_bit(codebook, c, j).first) x.support.push_back(j);

  if (x.support.size() != p.r)
    throw InconsistentCodeword(
        "decode_full: recovered support size " +
        std::to_string(x.support.size()) + " != r = " + std::to_string(p.r));
  return x;
}

}  // namespace sldc
