#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcdint/sieve.hpp"

namespace gcdint {

/// Truncated Euler product with an interval that provably contains the
/// infinite product.
///
/// Tail lemma: every local factor has the form 1 - x_p with 0 < x_p <= 1/4.
/// On that range -log(1 - x) <= 2x, so the omitted primes p > P change the
/// logarithm of the product by at most 2 * sum_{m>P} x_m, and
/// tail_bound = 1 - exp(-that) bounds the relative loss. Since every factor
/// is below 1, the truncated value is itself an upper bound.
struct EulerProductEstimate {
  std::uint64_t prime_limit = 0;
  std::uint64_t largest_prime = 0;
  std::uint64_t prime_count = 0;
  long double value = 0;
  long double tail_bound = 0;
  long double lower = 0;
  long double upper = 0;

  bool contains(long double x) const { return lower <= x && x <= upper; }
};

/// Running means (1/N') sum_{n<=N'} phi(n) sigma(n) / n^2 at each checkpoint.
struct MeanValueSeries {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> checkpoints;
  std::vector<long double> partial_means;
  long double final_mean = 0;
};

/// Exact non-negative rational, always in lowest terms.
struct Fraction {
  std::uint64_t num;
  std::uint64_t den;

  long double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// 1 - 1/(p^2 (p+1)). Throws std::domain_error for composite p.
long double local_factor(std::uint64_t p);

/// Same factor as an exact fraction; p must be small enough for p^3 to fit.
Fraction local_factor_exact(std::uint64_t p);

/// prod_{p <= prime_limit} (1 - 1/(p^2 (p+1))), tail bound 1 - exp(-1/P^2).
EulerProductEstimate euler_product(std::uint64_t prime_limit);

/// prod_{p <= prime_limit} (1 - 1/p^2), tail bound 1 - exp(-2/P).
EulerProductEstimate coprimality_product(std::uint64_t prime_limit);

/// Throws std::invalid_argument for an empty or out-of-range checkpoint list.
/// Checkpoints are reported in ascending order.
MeanValueSeries mean_value_series(const SieveTables& tables, std::span<const std::uint64_t> checkpoints);

/// phi(p^k) sigma(p^k) / p^(2k) = 1 - p^-(k+1), and 1 for k = 0.
/// Throws std::domain_error for composite p, std::overflow_error if p^(k+1)
/// does not fit in 64 bits.
Fraction prime_power_f(std::uint64_t p, unsigned k);

}  // namespace gcdint
