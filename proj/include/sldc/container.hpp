#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sldc/codec.hpp"

namespace sldc {

// Bit-exact on-disk form of one codeword. Layout, all integers little-endian:
//   magic "SLDC" | format_version u8 | scheme_version u8 |
//   n u64 | r u32 | d u32 | master_seed u64 | length u64 |
//   payload ceil(length/8) bytes, codeword bit i (1-based) at
//   byte (i-1)/8, bit (i-1)%8 (LSB first); trailing pad bits zero.
inline constexpr std::uint8_t kContainerFormatVersion = 1;
inline constexpr std::size_t kContainerHeaderSize = 38;

std::vector<std::uint8_t> serialize_codeword(const CodeParams& params,
                                             const Codeword& c);

/// Recovers the header parameters (k_max is not stored and comes back as 0)
/// and the exact ones-set. Throws BadMagic, UnsupportedVersion,
/// TruncatedPayload or NonzeroPadding.
std::pair<CodeParams, Codeword> parse_codeword(
    std::span<const std::uint8_t> bytes);

}  // namespace sldc
