#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gcdint/sieve.hpp"

namespace gcdint {

using i128 = __int128;

enum class SummatoryMethod { sieve, hyperbola };

std::string_view to_string(SummatoryMethod m);

/// Phi(x) = sum_{n<=x} phi(n) together with its 3x^2/pi^2 main term.
struct SummatoryResult {
  std::uint64_t x = 0;
  std::uint64_t phi_sum = 0;
  long double main_term = 0;
  long double abs_error = 0;
  /// abs_error / x^(3/2)
  long double normalized_error = 0;
  SummatoryMethod method = SummatoryMethod::sieve;
};

/// Mertens function M(x) = sum_{n<=x} mu(n) up to a fixed maximum argument.
/// Arguments up to the sieved base come from a prefix table; larger ones use
/// M(v) = 1 - sum_{d=2}^{v} M(floor(v/d)) over distinct-quotient blocks and
/// are memoized. The base is about x_max^(2/3), giving ~x_max^(2/3) work.
/// Not thread-safe; use one cache per computation.
class MertensCache {
 public:
  explicit MertensCache(std::uint64_t x_max);

  std::uint64_t x_max() const noexcept { return x_max_; }
  std::uint64_t small_limit() const noexcept { return tables_.limit(); }
  const SieveTables& tables() const noexcept { return tables_; }

  /// Throws std::invalid_argument for x > x_max.
  std::int64_t operator()(std::uint64_t x);

  std::size_t memo_size() const noexcept { return large_.size(); }

 private:
  std::int64_t large(std::uint64_t v);

  std::uint64_t x_max_;
  SieveTables tables_;
  std::vector<std::int64_t> small_;
  std::unordered_map<std::uint64_t, std::int64_t> large_;
};

inline std::int64_t mertens(std::uint64_t x, MertensCache& cache) { return cache(x); }

std::uint64_t isqrt(std::uint64_t x);

/// Hyperbola-method summatory function of the Dirichlet convolution g * h:
///
///   sum_{k<=n} (g*h)(k) = sum_{x<=a} g(x) H(n/x) + sum_{y<=b} h(y) G(n/y) - G(a) H(b)
///
/// with G, H the prefix sums of g, h, a = floor(sqrt n), b = floor(n/a), and
/// every quotient an integer floor. a*b <= n keeps the overlap rectangle under
/// the hyperbola, and any lattice point with x > a and y > b has xy > n, so
/// the two strips cover every term exactly once after the subtraction.
template <typename GValue, typename GPrefix, typename HValue, typename HPrefix>
i128 hyperbola_sum(std::uint64_t n, GValue&& g, GPrefix&& G, HValue&& h, HPrefix&& H) {
  if (n == 0) return 0;
  const std::uint64_t a = isqrt(n);
  const std::uint64_t b = n / a;
  i128 total = 0;
  for (std::uint64_t x = 1; x <= a; ++x) total += static_cast<i128>(g(x)) * static_cast<i128>(H(n / x));
  for (std::uint64_t y = 1; y <= b; ++y) total += static_cast<i128>(h(y)) * static_cast<i128>(G(n / y));
  total -= static_cast<i128>(G(a)) * static_cast<i128>(H(b));
  return total;
}

/// Largest x accepted by phi_sum_hyperbola; Phi(x) < x(x+1)/2 stays below 2^63.
inline constexpr std::uint64_t kMaxHyperbolaArgument = 4'000'000'000ULL;

/// Exact prefix sum of the sieved totient. Throws std::invalid_argument for
/// x == 0 or x beyond tables.limit().
SummatoryResult phi_sum_sieve(std::uint64_t x, const SieveTables& tables);

/// Phi(x) from phi = mu * N:
///   sum_{n<=y} mu(n) T(x/n) + sum_{m<=x/y} m M(x/m) - T(x/y) M(y),
/// y = floor(sqrt x), T(k) = k(k+1)/2. Throws std::invalid_argument for
/// x == 0 and std::overflow_error above kMaxHyperbolaArgument.
SummatoryResult phi_sum_hyperbola(std::uint64_t x);

/// Ordered pairs in [1,N]^2 with gcd 1, i.e. 2 Phi(N) - 1 ((1,1) is counted once).
std::uint64_t coprime_pair_count(std::uint64_t n);

/// Hyperbola-method results for every x; each x must be >= 2.
std::vector<SummatoryResult> error_term_report(std::span<const std::uint64_t> x_values);

}  // namespace gcdint
