#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sldc/codec.hpp"

namespace sldc {

// One communication round: Alice names a codeword position (at most z bits),
// Bob answers with that bit.
struct Round {
  std::uint64_t alice_position = 0;
  bool bob_bit = false;
};

struct Transcript {
  std::uint64_t z = 0;                // speed limit, bits per Alice message
  std::uint64_t codeword_length = 0;  // Bob's initial message, sent in z bits
  std::vector<Round> rounds;
  bool answer = false;  // f(i, S)
  std::uint64_t alice_bits_sent = 0;
  std::uint64_t bob_bits_sent = 0;
};

/// Membership query i against the stored set S, computed over the two-party
/// protocol: Bob encodes the indicator word of S, announces its length l in
/// z = ceil(log2(l+1)) bits, then answers one probed bit per round; Alice
/// outputs the AND. Zero rounds when the probe plan says Outside.
Transcript run_protocol(const Codebook& codebook,
                        std::span<const std::uint64_t> set, std::uint64_t i);

struct ProtocolStats {
  std::uint64_t trials = 0;
  double mean_pow2z = 0.0;     // sample mean of 2^z
  double ci95_pow2z = 0.0;     // normal-approximation halfwidth
  double mean_length = 0.0;    // sample mean of l
  double bound = 0.0;          // the achievability bound on E[2^z]
  bool mean_within_bound = false;
};

/// Sample S uniformly per trial (trial-keyed), run the protocol, and compare
/// the measured mean of 2^z against the achievability bound.
ProtocolStats protocol_cost_experiment(const CodeParams& params,
                                       std::uint64_t trials,
                                       std::uint64_t master_seed);

}  // namespace sldc
