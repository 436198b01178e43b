#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "sldc/container.hpp"
#include "sldc/errors.hpp"

using namespace sldc;

namespace {

const CodeParams kParams{12, 2, 3, 0};

}  // namespace

TEST_CASE("r=0 codeword serializes to a single zero payload byte") {
  const auto bytes = serialize_codeword({9, 0, 2, 0}, Codeword{1, {}});
  REQUIRE(bytes.size() == kContainerHeaderSize + 1);
  CHECK(bytes[kContainerHeaderSize] == 0x00);
}

TEST_CASE("worked codeword packs LSB-first") {
  // length 10, ones {2,3,4,6,7,8}: byte0 = 0b11101110, byte1 = 0x00.
  const auto bytes =
      serialize_codeword(kParams, Codeword{10, {2, 3, 4, 6, 7, 8}});
  REQUIRE(bytes.size() == kContainerHeaderSize + 2);
  CHECK(bytes[kContainerHeaderSize] == 0xEE);
  CHECK(bytes[kContainerHeaderSize + 1] == 0x00);
  CHECK(bytes[0] == 'S');
  CHECK(bytes[1] == 'L');
  CHECK(bytes[2] == 'D');
  CHECK(bytes[3] == 'C');
}

TEST_CASE("round trip preserves header and ones-set") {
  const Codeword c{10, {2, 4, 5, 6, 7, 8}};
  const auto [params, parsed] = parse_codeword(serialize_codeword(kParams, c));
  CHECK(parsed == c);
  CHECK(params.n == kParams.n);
  CHECK(params.r == kParams.r);
  CHECK(params.d == kParams.d);
  CHECK(params.master_seed == kParams.master_seed);
  CHECK(params.scheme_version == 1);
}

TEST_CASE("round trip property on randomized codewords") {
  std::uint64_t state = 777;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int trial = 0; trial < 500; ++trial) {
    Codeword c;
    c.length = 1 + next() % 200;
    for (std::uint64_t pos = 1; pos <= c.length; ++pos)
      if (next() % 3 == 0) c.ones.push_back(pos);
    CodeParams params{next() % 5000, next() % 16, 1 + next() % 8, next()};
    const auto bytes = serialize_codeword(params, c);
    const auto [echo, parsed] = parse_codeword(bytes);
    CHECK(parsed == c);
    CHECK(echo.n == params.n);
    CHECK(echo.master_seed == params.master_seed);
  }
}

TEST_CASE("malformed containers are rejected") {
  auto bytes = serialize_codeword(kParams, Codeword{10, {2, 3, 4}});

  SUBCASE("bad magic") {
    bytes[0] = 'X';
    CHECK_THROWS_AS(parse_codeword(bytes), BadMagic);
  }
  SUBCASE("unsupported format version") {
    bytes[4] = 9;
    CHECK_THROWS_AS(parse_codeword(bytes), UnsupportedVersion);
  }
  SUBCASE("unsupported scheme version") {
    bytes[5] = 9;
    CHECK_THROWS_AS(parse_codeword(bytes), UnsupportedVersion);
  }
  SUBCASE("truncated payload") {
    bytes.pop_back();
    CHECK_THROWS_AS(parse_codeword(bytes), TruncatedPayload);
  }
  SUBCASE("truncated header") {
    bytes.resize(10);
    CHECK_THROWS_AS(parse_codeword(bytes), TruncatedPayload);
  }
  SUBCASE("nonzero padding") {
    bytes.back() |= 0x80;  // bit 16 of a length-10 payload
    CHECK_THROWS_AS(parse_codeword(bytes), NonzeroPadding);
  }
}
