#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sldc/codebook.hpp"

namespace sldc {

// A source word: length n plus the sorted support (positions of the ones).
struct SparseSeq {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> support;

  bool operator==(const SparseSeq&) const = default;
};

// A variable-length codeword, stored sparsely as its set-bit positions.
struct Codeword {
  std::uint64_t length = 0;
  std::vector<std::uint64_t> ones;  // sorted, subset of [1..length]

  bool bit(std::uint64_t pos) const;
  bool operator==(const Codeword&) const = default;
};

// Record of one local-decode: which positions were read and what came back.
struct ProbeTrace {
  std::uint64_t query = 0;
  std::uint64_t length = 0;
  std::vector<std::uint64_t> positions;  // empty when the query is outside S_l
  std::vector<bool> values;
  bool decoded = false;
};

/// Conditions C1 and C2 for one level: the support lies inside S_k and no
/// probe set of a non-support member of S_k is covered by the union of the
/// support's probe sets.
bool level_accepts(const LevelPlan& plan, std::span<const std::uint64_t> support);

/// Encode x at the smallest accepting level k(x); the codeword's ones-set is
/// the union of the support's probe sets at that level. Throws
/// SearchCapExceeded when no level up to k_max accepts.
Codeword encode(const Codebook& codebook, const SparseSeq& x);

/// Recover bit j from the codeword length and at most d probed bits: 0
/// without probing when j is outside S_l, otherwise the AND of the d bits at
/// T_{j,l}. Always probes all d positions (never short-circuits).
std::pair<bool, ProbeTrace> decode_bit(const Codebook& codebook,
                                       const Codeword& c, std::uint64_t j);

/// Invertibility witness: decode every bit. Throws InconsistentCodeword when
/// the recovered support does not have exactly r elements.
SparseSeq decode_full(const Codebook& codebook, const Codeword& c);

}  // namespace sldc
