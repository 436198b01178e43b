#include "sldc/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sldc {

BigCount binom_exact(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("binom_exact: n must be non-negative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is always an integer after this division
  }
  return result;
}

double log_binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n)
    throw std::domain_error("log_binom: k out of range [0, n]");
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log_big(const BigCount& x) {
  if (x <= 0) throw std::domain_error("log_big: argument must be positive");
  using bf = boost::multiprecision::cpp_bin_float_100;
  return static_cast<double>(boost::multiprecision::log(bf(x)));
}

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t prf64(const SampleKey& key, std::uint64_t counter) {
  std::uint64_t h = mix64(key.master_seed + 0x9e3779b97f4a7c15ull);
  h = mix64(h ^ key.level);
  h = mix64(h ^ static_cast<std::uint64_t>(key.role));
  h = mix64(h ^ key.index);
  h = mix64(h ^ counter);
  return h;
}

std::uint64_t PrfStream::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform: bound must be >= 1");
  // Reject words >= bound * floor(2^64 / bound), i.e. >= 2^64 - (2^64 mod bound).
  const std::uint64_t residue = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t word = next_word();
    if (residue != 0 && word >= 0 - residue) continue;
    return word % bound + 1;
  }
}

std::vector<std::uint64_t> sample_subset(std::uint64_t universe_size,
                                         std::uint64_t subset_size,
                                         const SampleKey& key) {
  if (subset_size > universe_size)
    throw std::invalid_argument("sample_subset: subset larger than universe");
  PrfStream stream(key);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(subset_size);
  for (std::uint64_t v = universe_size - subset_size + 1; v <= universe_size; ++v) {
    const std::uint64_t candidate = stream.uniform(v);
    if (!chosen.insert(candidate).second) chosen.insert(v);
  }
  std::vector<std::uint64_t> result(chosen.begin(), chosen.end());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace sldc
