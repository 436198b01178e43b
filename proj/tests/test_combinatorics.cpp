#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "sldc/combinatorics.hpp"

using namespace sldc;

TEST_CASE("binom_exact closed forms and conventions") {
  CHECK(binom_exact(4, 2) == 6);
  CHECK(binom_exact(12, 2) == 66);
  CHECK(binom_exact(7, 9) == 0);
  CHECK(binom_exact(7, -1) == 0);
  CHECK(binom_exact(0, 0) == 1);
  CHECK(binom_exact(60, 30) == BigCount("118264581564861424"));
}

TEST_CASE("binom_exact satisfies Pascal's rule exhaustively to n=60") {
  for (std::int64_t n = 1; n <= 60; ++n)
    for (std::int64_t k = 1; k < n; ++k)
      CHECK(binom_exact(n, k) == binom_exact(n - 1, k) + binom_exact(n - 1, k - 1));
}

TEST_CASE("log_binom agrees with the exact values") {
  CHECK(log_binom(12, 2) == doctest::Approx(std::log(66.0)).epsilon(1e-12));
  CHECK(log_binom(5, 0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(log_binom(7, 9), std::domain_error);
  CHECK_THROWS_AS(log_binom(7, -1), std::domain_error);

  for (std::int64_t n = 0; n <= 200; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const double exact = log_big(binom_exact(n, k));
      const double ratio = std::exp(log_binom(n, k) - exact);
      CHECK(ratio == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("log_binom at n = 10^6 matches the big-integer oracle") {
  const double exact = log_big(binom_exact(1000000, 10));
  CHECK(log_binom(1000000, 10) == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("prf64 is deterministic and counter-sensitive") {
  const SampleKey key{42, 3, SampleRole::ProbeSet, 7};
  CHECK(prf64(key, 0) == prf64(key, 0));
  CHECK(prf64(key, 0) != prf64(key, 1));

  // Counter separation scan: consecutive counters never collide over 10^6 keys.
  for (std::uint64_t s = 0; s < 1000000; ++s) {
    const SampleKey k{s, 0, SampleRole::Trial, 0};
    if (prf64(k, 0) == prf64(k, 1)) FAIL("prf64 counter collision at seed ", s);
  }
}

TEST_CASE("prf64 per-bit frequency is unbiased over 10^6 draws") {
  constexpr std::uint64_t kDraws = 1000000;
  std::uint64_t counts[64] = {};
  const SampleKey key{123, 0, SampleRole::Trial, 0};
  for (std::uint64_t c = 0; c < kDraws; ++c) {
    const std::uint64_t w = prf64(key, c);
    for (int b = 0; b < 64; ++b) counts[b] += (w >> b) & 1;
  }
  // 3 sigma around p = 1/2: sigma = sqrt(N/4) = 500.
  for (int b = 0; b < 64; ++b) {
    CHECK(counts[b] > kDraws / 2 - 3 * 500);
    CHECK(counts[b] < kDraws / 2 + 3 * 500);
  }
}

TEST_CASE("sample_subset degenerate sizes") {
  const SampleKey key{9, 1, SampleRole::LevelSet, 0};
  CHECK(sample_subset(5, 5, key) == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(sample_subset(5, 0, key).empty());
  CHECK_THROWS_AS(sample_subset(3, 4, key), std::invalid_argument);
}

TEST_CASE("sample_subset output is sorted, distinct and in range") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SampleKey key{seed, seed % 7, SampleRole::LevelSet, seed % 3};
    const std::uint64_t universe = 1 + prf64(key, 99) % 500;
    const std::uint64_t size = prf64(key, 100) % (universe + 1);
    const auto subset = sample_subset(universe, size, key);
    REQUIRE(subset.size() == size);
    std::set<std::uint64_t> unique(subset.begin(), subset.end());
    CHECK(unique.size() == size);
    CHECK(std::is_sorted(subset.begin(), subset.end()));
    if (!subset.empty()) {
      CHECK(subset.front() >= 1);
      CHECK(subset.back() <= universe);
    }
    CHECK(sample_subset(universe, size, key) == subset);
  }
}

TEST_CASE("sample_subset inclusion frequency is uniform") {
  // N=100, m=10 over 10^5 keys: per-element inclusion ~ Binomial(10^5, 0.1).
  constexpr std::uint64_t kKeys = 100000;
  std::uint64_t hits[101] = {};
  for (std::uint64_t s = 0; s < kKeys; ++s)
    for (const std::uint64_t e :
         sample_subset(100, 10, {s, 0, SampleRole::Trial, 0}))
      ++hits[e];
  const double expected = kKeys * 0.1;
  const double sigma = std::sqrt(kKeys * 0.1 * 0.9);
  for (int e = 1; e <= 100; ++e) {
    CHECK(hits[e] > expected - 3 * sigma);
    CHECK(hits[e] < expected + 3 * sigma);
  }
}
