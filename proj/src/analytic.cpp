#include "gcdint/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gcdint/arith.hpp"

namespace gcdint {

namespace {

// 113-bit mantissa for the running product; 10^5 multiplications stay far
// below the sixth decimal.
using wide = __float128;

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
}

template <typename Deficit>
EulerProductEstimate truncated_product(std::uint64_t prime_limit, long double log_tail, Deficit deficit) {
  if (prime_limit < 2) throw std::invalid_argument("prime limit must be >= 2");
  const auto tables = SieveTables::build(prime_limit);
  wide product = 1;
  for (const std::uint32_t p : tables.primes()) {
    product *= wide{1} - deficit(static_cast<wide>(p));
  }
  EulerProductEstimate est;
  est.prime_limit = prime_limit;
  est.prime_count = tables.primes().size();
  est.largest_prime = tables.primes().back();
  est.value = static_cast<long double>(product);
  est.tail_bound = -std::expm1(-log_tail);
  // One ulp outward on each side absorbs the final rounding to long double.
  est.upper = std::nextafter(est.value, std::numeric_limits<long double>::infinity());
  est.lower = std::nextafter(est.value * (1.0L - est.tail_bound), 0.0L);
  return est;
}

}  // namespace

long double local_factor(std::uint64_t p) {
  require_prime(p);
  const long double q = static_cast<long double>(p);
  return 1.0L - 1.0L / (q * q * (q + 1.0L));
}

Fraction local_factor_exact(std::uint64_t p) {
  require_prime(p);
  if (p > 2'000'000) throw std::overflow_error("p^2 (p+1) does not fit in 64 bits");
  const std::uint64_t den = p * p * (p + 1);
  return Fraction{den - 1, den};
}

EulerProductEstimate euler_product(std::uint64_t prime_limit) {
  const long double P = static_cast<long double>(prime_limit);
  return truncated_product(prime_limit, 1.0L / (P * P),
                           [](wide p) { return wide{1} / (p * p * (p + 1)); });
}

EulerProductEstimate coprimality_product(std::uint64_t prime_limit) {
  const long double P = static_cast<long double>(prime_limit);
  return truncated_product(prime_limit, 2.0L / P, [](wide p) { return wide{1} / (p * p); });
}

MeanValueSeries mean_value_series(const SieveTables& tables, std::span<const std::uint64_t> checkpoints) {
  if (checkpoints.empty()) throw std::invalid_argument("checkpoint list is empty");
  std::vector<std::uint64_t> sorted(checkpoints.begin(), checkpoints.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() == 0) throw std::invalid_argument("checkpoints must be >= 1");
  if (sorted.back() > tables.limit()) {
    throw std::invalid_argument("checkpoint " + std::to_string(sorted.back()) + " exceeds sieve limit " +
                                std::to_string(tables.limit()));
  }

  MeanValueSeries series;
  series.limit = sorted.back();
  series.checkpoints = sorted;
  series.partial_means.reserve(sorted.size());

  // Kahan summation of the near-unity terms.
  long double sum = 0;
  long double carry = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= series.limit; ++n) {
    const std::uint64_t numerator = std::uint64_t{tables.phi(n)} * tables.sigma(n);
    const long double nn = static_cast<long double>(n);
    const long double term = static_cast<long double>(numerator) / (nn * nn) - carry;
    const long double t = sum + term;
    carry = (t - sum) - term;
    sum = t;
    if (n == sorted[next]) {
      series.partial_means.push_back(sum / nn);
      ++next;
    }
  }
  series.final_mean = series.partial_means.back();
  return series;
}

Fraction prime_power_f(std::uint64_t p, unsigned k) {
  require_prime(p);
  if (k == 0) return Fraction{1, 1};
  std::uint64_t pk1 = 1;
  for (unsigned i = 0; i <= k; ++i) {
    if (pk1 > std::numeric_limits<std::uint64_t>::max() / p) {
      throw std::overflow_error("p^(k+1) does not fit in 64 bits");
    }
    pk1 *= p;
  }
  return Fraction{pk1 - 1, pk1};
}

}  // namespace gcdint
