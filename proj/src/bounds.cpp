#include "sldc/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace sldc {

namespace {

constexpr double kFourE = 4.0 * 2.718281828459045235;

// C(n,r) values above this bit width are not expanded exactly; the LYM
// counting then reports M as unavailable instead of approximating.
constexpr unsigned kExactBitCap = 10000;

void check_ranges(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                  double eps) {
  if (r < 1 || r > n) throw std::domain_error("bounds: need 1 <= r <= n");
  if (d < 1) throw std::domain_error("bounds: need d >= 1");
  if (!(eps >= 0.0 && eps < 1.0))
    throw std::domain_error("bounds: need 0 <= eps < 1");
}

}  // namespace

double lower_bound_adaptive(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                            double eps) {
  check_ranges(n, r, d, eps);
  const double m = static_cast<double>(r) * static_cast<double>(d) + 1.0;
  const double log_target =
      std::log1p(-eps) + log_binom(static_cast<std::int64_t>(n),
                                   static_cast<std::int64_t>(r));
  // ((1-eps)C)^{1/m} - 1 via expm1 so the d -> infinity limit stays accurate.
  const double root_minus_one = std::expm1(log_target / m);
  return (m / kFourE) * root_minus_one - 1.0;
}

BigCount max_codewords_of_length(std::uint64_t k, std::uint64_t rd) {
  if (k < 1 || rd < 1)
    throw std::domain_error("max_codewords_of_length: need k, rd >= 1");
  const std::uint64_t v = std::min(k, rd);
  return binom_exact(static_cast<std::int64_t>(2 * k),
                     static_cast<std::int64_t>(v));
}

LymBound lym_lower_bound(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                         double eps) {
  check_ranges(n, r, d, eps);
  const BigCount total = binom_exact(static_cast<std::int64_t>(n),
                                     static_cast<std::int64_t>(r));
  if (boost::multiprecision::msb(total) + 1 > kExactBitCap)
    return {false, 0, 0.0};

  // floor((1-eps) * C(n,r)) exactly: a double is a dyadic rational.
  BigCount target;
  if (eps == 0.0) {
    target = total;
  } else {
    int exp = 0;
    const double frac = std::frexp(1.0 - eps, &exp);
    const auto mantissa =
        static_cast<std::int64_t>(std::ldexp(frac, 53));  // frac * 2^53
    target = (total * mantissa) >> (53 - exp);
  }

  const std::uint64_t rd_product = r * d;
  BigCount partial = 0;
  std::uint64_t m = 0;
  for (std::uint64_t k = 1;; ++k) {
    partial += max_codewords_of_length(k, rd_product);
    if (partial > target) break;
    m = k;
  }
  return {true, m, (static_cast<double>(m) + 1.0) / 2.0};
}

double upper_bound_nonadaptive(std::uint64_t n, std::uint64_t r,
                               std::uint64_t d) {
  check_ranges(n, r, d, 0.0);
  const double m = static_cast<double>(r) * static_cast<double>(d) + 1.0;
  const double log_inner =
      (static_cast<double>(r) + 1.0) * std::log(static_cast<double>(r) + 1.0) +
      log_binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r));
  return 30.0 * m * std::exp(log_inner / m);
}

bool summed_capacity_check(std::uint64_t M, std::uint64_t v) {
  if (M < 1 || v < 1) throw std::domain_error("summed_capacity_check: need M, v >= 1");
  BigCount lhs = 0;
  for (std::uint64_t k = 1; k <= M; ++k)
    lhs += max_codewords_of_length(k, v);
  const double lhs_log = log_big(lhs);
  const double vd = static_cast<double>(v);
  const double rhs_log =
      vd * std::log(2.0) +
      (vd + 1.0) * std::log(static_cast<double>(M) + 2.0 +
                            (vd + 1.0) / (2.0 * 2.718281828459045235)) -
      std::lgamma(vd + 2.0);
  return lhs_log <= rhs_log + 1e-9 * std::abs(rhs_log);
}

BoundsReport bounds_report(std::uint64_t n, std::uint64_t r, std::uint64_t d,
                           double eps) {
  check_ranges(n, r, d, eps);
  BoundsReport report;
  report.n = n;
  report.r = r;
  report.d = d;
  report.block_error_eps = eps;
  const double log_c = log_binom(static_cast<std::int64_t>(n),
                                 static_cast<std::int64_t>(r));
  report.entropy_bits = log_c / std::log(2.0);
  report.lower_thm1 = lower_bound_adaptive(n, r, d, eps);
  const LymBound lym = lym_lower_bound(n, r, d, eps);
  report.m_available = lym.m_available;
  report.m = lym.m;
  report.lower_lym = lym.bound;
  report.upper_thm2 = upper_bound_nonadaptive(n, r, d);
  const double m = static_cast<double>(r) * static_cast<double>(d) + 1.0;
  report.reference_scale = static_cast<double>(r) * static_cast<double>(d) *
                           std::exp(log_c / m);
  return report;
}

}  // namespace sldc
