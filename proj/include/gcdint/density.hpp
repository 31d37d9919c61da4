#pragma once

#include <cstdint>
#include <vector>

namespace gcdint {

/// Exact census of f over the ordered grid [1,n]^2.
struct DensityReport {
  std::uint64_t n = 0;
  std::uint64_t ones_count = 0;
  /// n^2, the denominator of rho_n.
  std::uint64_t total = 0;
  std::uint64_t histogram_cap = 0;
  /// histogram[v] counts pairs with f = v for 1 <= v <= cap; slot 0 is unused.
  std::vector<std::uint64_t> histogram;
  /// Pairs with f > cap.
  std::uint64_t overflow = 0;

  long double rho() const { return static_cast<long double>(ones_count) / static_cast<long double>(total); }

  friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

/// Row-major n x n grid of f(i, j), 1-based in the accessors.
struct HeatmapGrid {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> values;

  std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
    return values[std::size_t{i - 1} * n + (j - 1)];
  }

  friend bool operator==(const HeatmapGrid&, const HeatmapGrid&) = default;
};

/// Pairs in [1,n]^2 where p | d and p | (a' + b'), with d = gcd(a,b).
struct LocalEventEstimate {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t event_count = 0;
  std::uint64_t total = 0;
  long double density = 0;
  /// Limiting probability 1 / (p^2 (p + 1)).
  long double target = 0;
};

inline constexpr std::uint64_t kDefaultHistogramCap = 10;

/// Counts every ordered pair exactly, enumerating i <= j and doubling the
/// off-diagonal cells. threads == 0 means std::thread::hardware_concurrency().
/// The result does not depend on the thread count.
///
/// Throws std::invalid_argument for n == 0 or histogram_cap == 0, and
/// std::overflow_error when n^2 does not fit in 64 bits.
DensityReport density_report(std::uint64_t n, std::uint64_t histogram_cap = kDefaultHistogramCap,
                             unsigned threads = 0);

/// Throws std::invalid_argument for n == 0 and std::length_error past 65535.
HeatmapGrid heatmap(std::uint32_t n);

/// Exhaustive count of the local event E_p. Only pairs with p | a and p | b
/// can qualify, so the scan runs over the (n/p)^2 multiples of p.
/// Throws std::domain_error unless p is prime.
LocalEventEstimate local_event_density(std::uint64_t p, std::uint64_t n);

/// Resolves a thread-count request (0 = auto) to a positive count.
unsigned resolve_threads(unsigned requested);

}  // namespace gcdint
