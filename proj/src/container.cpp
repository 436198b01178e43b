#include "sldc/container.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "sldc/errors.hpp"

namespace sldc {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'S', 'L', 'D', 'C'};

void put_le(std::vector<std::uint8_t>& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back((value >> (8 * i)) & 0xff);
}

std::uint64_t get_le(std::span<const std::uint8_t> bytes, std::size_t offset,
                     int width) {
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i)
    value |= static_cast<std::uint64_t>(bytes[offset + i]) << (8 * i);
  return value;
}

}  // namespace

std::vector<std::uint8_t> serialize_codeword(const CodeParams& params,
                                             const Codeword& c) {
  std::vector<std::uint8_t> out;
  const std::uint64_t payload_bytes = (c.length + 7) / 8;
  out.reserve(kContainerHeaderSize + payload_bytes);

  out.insert(out.end(), kMagic.begin(), kMagic.end());
  out.push_back(kContainerFormatVersion);
  out.push_back(static_cast<std::uint8_t>(params.scheme_version));
  put_le(out, params.n, 8);
  put_le(out, params.r, 4);
  put_le(out, params.d, 4);
  put_le(out, params.master_seed, 8);
  put_le(out, c.length, 8);

  out.resize(kContainerHeaderSize + payload_bytes, 0);
  for (const std::uint64_t pos : c.ones)
    out[kContainerHeaderSize + (pos - 1) / 8] |= 1u << ((pos - 1) % 8);
  return out;
}

std::pair<CodeParams, Codeword> parse_codeword(
    std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kContainerHeaderSize)
    throw TruncatedPayload("container shorter than the fixed header");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin()))
    throw BadMagic("container magic is not SLDC");
  if (bytes[4] != kContainerFormatVersion)
    throw UnsupportedVersion("unknown container format version " +
                             std::to_string(bytes[4]));
  if (bytes[5] != 1)
    throw UnsupportedVersion("unknown scheme version " +
                             std::to_string(bytes[5]));

  CodeParams params;
  params.scheme_version = bytes[5];
  params.n = get_le(bytes, 6, 8);
  params.r = get_le(bytes, 14, 4);
  params.d = get_le(bytes, 18, 4);
  params.master_seed = get_le(bytes, 22, 8);

  Codeword c;
  c.length = get_le(bytes, 30, 8);
  const std::uint64_t payload_bytes = (c.length + 7) / 8;
  if (bytes.size() < kContainerHeaderSize + payload_bytes)
    throw TruncatedPayload("payload shorter than ceil(length/8) bytes");
  if (bytes.size() > kContainerHeaderSize + payload_bytes)
    throw TruncatedPayload("trailing bytes after the payload");

  for (std::uint64_t i = 1; i <= c.length; ++i) {
    if (bytes[kContainerHeaderSize + (i - 1) / 8] >> ((i - 1) % 8) & 1)
      c.ones.push_back(i);
  }
  // Pad bits above the length must be zero.
  if (c.length % 8 != 0) {
    const std::uint8_t last = bytes[bytes.size() - 1];
    if (last >> (c.length % 8) != 0)
      throw NonzeroPadding("nonzero pad bits in the final payload byte");
  }
  return {params, std::move(c)};
}

}  // namespace sldc
