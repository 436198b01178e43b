#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fixtures.hpp"
#include "sldc/codec.hpp"
#include "sldc/errors.hpp"

using namespace sldc;

namespace {

std::vector<std::vector<std::uint64_t>> all_supports(std::uint64_t n,
                                                     std::uint64_t r) {
  std::vector<std::vector<std::uint64_t>> result;
  std::vector<std::uint64_t> comb(r);
  for (std::uint64_t i = 0; i < r; ++i) comb[i] = i + 1;
  if (r == 0) return {comb};
  for (;;) {
    result.push_back(comb);
    std::size_t pivot = r;
    for (std::size_t p = r; p-- > 0;) {
      if (comb[p] < n - (r - 1 - p)) {
        pivot = p;
        break;
      }
    }
    if (pivot == r) break;
    ++comb[pivot];
    for (std::size_t j = pivot + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
  }
  return result;
}

}  // namespace

TEST_CASE("worked plan: which supports the level accepts") {
  const LevelPlan plan = fixtures::worked_plan_k10();
  // All C1-satisfying pairs from S_10 = {2,3,5,6}; C2 holds only for
  // {2,6}, {3,6} and {5,6}.
  CHECK_FALSE(level_accepts(plan, std::vector<std::uint64_t>{2, 3}));
  CHECK_FALSE(level_accepts(plan, std::vector<std::uint64_t>{2, 5}));
  CHECK_FALSE(level_accepts(plan, std::vector<std::uint64_t>{3, 5}));
  CHECK(level_accepts(plan, std::vector<std::uint64_t>{2, 6}));
  CHECK(level_accepts(plan, std::vector<std::uint64_t>{3, 6}));
  CHECK(level_accepts(plan, std::vector<std::uint64_t>{5, 6}));
  // C1 failure: support not inside S_10.
  CHECK_FALSE(level_accepts(plan, std::vector<std::uint64_t>{1, 6}));
}

TEST_CASE("empty support accepts an empty level vacuously") {
  const LevelPlan empty{1, {}, {}};
  CHECK(level_accepts(empty, std::vector<std::uint64_t>{}));
}

TEST_CASE("worked plan: encode") {
  const Codebook codebook = fixtures::worked_codebook();
  const Codeword c26 = encode(codebook, {12, {2, 6}});
  CHECK(c26.length == 10);
  CHECK(c26.ones == std::vector<std::uint64_t>{2, 3, 4, 6, 7, 8});
  const Codeword c36 = encode(codebook, {12, {3, 6}});
  CHECK(c36.length == 10);
  CHECK(c36.ones == std::vector<std::uint64_t>{2, 4, 5, 6, 7, 8});
  const Codeword c56 = encode(codebook, {12, {5, 6}});
  CHECK(c56.ones == std::vector<std::uint64_t>{3, 4, 5, 6, 7, 8});
}

TEST_CASE("worked plan: decode_bit") {
  const Codebook codebook = fixtures::worked_codebook();
  const Codeword c = encode(codebook, {12, {2, 6}});

  SUBCASE("outside S_l answers 0 with zero probes") {
    const auto [bit, trace] = decode_bit(codebook, c, 4);
    CHECK_FALSE(bit);
    CHECK(trace.positions.empty());
    CHECK(trace.values.empty());
  }
  SUBCASE("support bit decodes 1 over d probes") {
    const auto [bit, trace] = decode_bit(codebook, c, 2);
    CHECK(bit);
    CHECK(trace.positions == std::vector<std::uint64_t>{2, 3, 4});
    CHECK(trace.values == std::vector<bool>{true, true, true});
  }
  SUBCASE("non-support member of S_l decodes 0 after full probing") {
    const auto [bit, trace] = decode_bit(codebook, c, 3);
    CHECK_FALSE(bit);
    CHECK(trace.positions == std::vector<std::uint64_t>{2, 4, 5});
    CHECK(trace.values == std::vector<bool>{true, true, false});
  }
  SUBCASE("query out of range") {
    CHECK_THROWS_AS(decode_bit(codebook, c, 0), QueryOutOfRange);
    CHECK_THROWS_AS(decode_bit(codebook, c, 13), QueryOutOfRange);
  }
}

TEST_CASE("worked plan: decode_full recovers the support") {
  const Codebook codebook = fixtures::worked_codebook();
  const Codeword c56{10, {3, 4, 5, 6, 7, 8}};
  CHECK(decode_full(codebook, c56).support == std::vector<std::uint64_t>{5, 6});

  // A codeword covering only one support probe set is inconsistent.
  const Codeword bad{10, {2, 3, 4}};
  CHECK_THROWS_AS(decode_full(codebook, bad), InconsistentCodeword);
}

TEST_CASE("r=0 convention: single-bit all-zero codeword") {
  Codebook codebook(CodeParams{9, 0, 2, 31});
  const Codeword c = encode(codebook, {9, {}});
  CHECK(c.length == 1);
  CHECK(c.ones.empty());
  const SparseSeq x = decode_full(codebook, c);
  CHECK(x.support.empty());
  for (std::uint64_t j = 1; j <= 9; ++j)
    CHECK_FALSE(decode_bit(codebook, c, j).first);
}

TEST_CASE("exhaustive round trip at n=8, r=2, d=2") {
  Codebook codebook(CodeParams{8, 2, 2, 0});
  for (const auto& support : all_supports(8, 2)) {
    const SparseSeq x{8, support};
    const Codeword c = encode(codebook, x);
    CHECK(c.length >= 5);  // length floor r*d + 1
    CHECK(decode_full(codebook, c) == x);
    for (std::uint64_t j = 1; j <= 8; ++j) {
      const bool expected =
          std::binary_search(support.begin(), support.end(), j);
      const auto [bit, trace] = decode_bit(codebook, c, j);
      CHECK(bit == expected);
      CHECK(trace.positions.size() <= 2);
    }
  }
}

TEST_CASE("encode rejects mismatched input and tiny caps") {
  Codebook codebook(CodeParams{8, 2, 2, 0});
  CHECK_THROWS_AS(encode(codebook, SparseSeq{8, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(encode(codebook, SparseSeq{9, {1, 2}}), std::invalid_argument);

  // A cap at the minimum level leaves no accepting level for most seeds.
  Codebook capped(CodeParams{64, 2, 2, 0, 5});
  CHECK_THROWS_AS(encode(capped, SparseSeq{64, {10, 20}}), SearchCapExceeded);
}
