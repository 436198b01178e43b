#pragma once

#include <cstdint>

#include "sldc/combinatorics.hpp"

namespace sldc {

// All bounds target E[codeword length] in bits. The adaptive converse is
// stated here already rearranged to bound E[l] directly (the "+1" of the
// published form is folded in), so every comparison in the harness uses the
// same convention.

/// Adaptive-decoder converse: ((rd+1)/(4e)) * (((1-eps) C(n,r))^{1/(rd+1)} - 1) - 1.
/// eps is the allowed block-error rate.
double lower_bound_adaptive(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                            double eps = 0.0);

/// Cap on the number of source words sharing codeword length k under an
/// rd-probe footprint: max_{v <= rd} C(2k, v) = C(2k, min(k, rd)).
BigCount max_codewords_of_length(std::uint64_t k, std::uint64_t rd);

struct LymBound {
  bool m_available = true;  // false when C(n,r) exceeds the exact-arith cap
  std::uint64_t m = 0;
  double bound = 0.0;  // (m + 1) / 2
};

/// M = largest integer with sum_{k=1}^{M} max_codewords_of_length(k, rd)
/// <= floor((1-eps) * C(n,r)), by exact big-integer comparison.
LymBound lym_lower_bound(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                         double eps = 0.0);

/// Non-adaptive achievability: 30 (rd+1) ((r+1)^{r+1} C(n,r))^{1/(rd+1)}.
double upper_bound_nonadaptive(std::uint64_t n, std::uint64_t r,
                               std::uint64_t d);

/// True iff sum_{k=1}^{M} max_{i<=v} C(2k,i)
/// <= 2^v (M + 2 + (v+1)/(2e))^{v+1} / (v+1)!, LHS exact, RHS in log space.
bool summed_capacity_check(std::uint64_t M, std::uint64_t v);

struct BoundsReport {
  std::uint64_t n = 0, r = 0, d = 0;
  double block_error_eps = 0.0;
  double entropy_bits = 0.0;   // log2 C(n,r)
  double lower_thm1 = 0.0;     // adaptive converse on E[l]
  bool m_available = true;
  std::uint64_t m = 0;
  double lower_lym = 0.0;      // (M+1)/2
  double upper_thm2 = 0.0;     // non-adaptive achievability
  double reference_scale = 0.0;  // r*d*C(n,r)^{1/(rd+1)}, the matched-order scale
};

BoundsReport bounds_report(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                           double eps = 0.0);

}  // namespace sldc
