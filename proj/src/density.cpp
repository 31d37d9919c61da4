#include "gcdint/density.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "gcdint/arith.hpp"

namespace gcdint {

namespace {

struct RowBlock {
  std::uint64_t first;
  std::uint64_t last;  // inclusive
};

struct PartialCount {
  std::vector<std::uint64_t> histogram;
  std::uint64_t overflow = 0;
};

// Splits rows 1..n into contiguous blocks of roughly equal triangle area.
// The partition depends only on n, never on the thread count.
std::vector<RowBlock> partition_rows(std::uint64_t n) {
  const std::uint64_t target_blocks = std::min<std::uint64_t>(n, 512);
  const long double total = static_cast<long double>(n) * (n + 1) / 2;
  const long double per_block = total / target_blocks;
  std::vector<RowBlock> blocks;
  std::uint64_t first = 1;
  long double acc = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    acc += static_cast<long double>(n - i + 1);
    if (acc >= per_block || i == n) {
      blocks.push_back({first, i});
      first = i + 1;
      acc = 0;
    }
  }
  return blocks;
}

void count_block(const RowBlock& block, std::uint64_t n, std::uint64_t cap, PartialCount& out) {
  out.histogram.assign(cap + 1, 0);
  auto& hist = out.histogram;
  std::uint64_t overflow = 0;
  for (std::uint64_t i = block.first; i <= block.last; ++i) {
    const std::uint64_t diag = detail::f_unchecked(i, i);
    if (diag <= cap) {
      ++hist[diag];
    } else {
      ++overflow;
    }
    for (std::uint64_t j = i + 1; j <= n; ++j) {
      const std::uint64_t v = detail::f_unchecked(i, j);
      if (v <= cap) {
        hist[v] += 2;
      } else {
        overflow += 2;
      }
    }
  }
  out.overflow = overflow;
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

DensityReport density_report(std::uint64_t n, std::uint64_t histogram_cap, unsigned threads) {
  if (n == 0) throw std::invalid_argument("grid size n must be >= 1");
  if (histogram_cap == 0) throw std::invalid_argument("histogram cap must be >= 1");
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw std::overflow_error("n^2 does not fit in a 64-bit count for n = " + std::to_string(n));
  }
  const std::uint64_t cap = std::min<std::uint64_t>(histogram_cap, 1u << 20);

  const auto blocks = partition_rows(n);
  std::vector<PartialCount> partials(blocks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next.fetch_add(1); b < blocks.size(); b = next.fetch_add(1)) {
      count_block(blocks[b], n, cap, partials[b]);
    }
  };
  const unsigned workers = std::min<std::size_t>(resolve_threads(threads), blocks.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  DensityReport report;
  report.n = n;
  report.total = n * n;
  report.histogram_cap = cap;
  report.histogram.assign(cap + 1, 0);
  for (const auto& part : partials) {
    for (std::uint64_t v = 1; v <= cap; ++v) report.histogram[v] += part.histogram[v];
    report.overflow += part.overflow;
  }
  report.ones_count = report.histogram[1];
  return report;
}

HeatmapGrid heatmap(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("grid size n must be >= 1");
  if (n > 65535) throw std::length_error("heat map grid too large: n = " + std::to_string(n));
  HeatmapGrid grid;
  grid.n = n;
  grid.values.resize(std::size_t{n} * n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      grid.values[std::size_t{i - 1} * n + (j - 1)] = static_cast<std::uint32_t>(detail::f_unchecked(i, j));
    }
  }
  return grid;
}

LocalEventEstimate local_event_density(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("grid size n must be >= 1");
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw std::overflow_error("n^2 does not fit in a 64-bit count for n = " + std::to_string(n));
  }
  LocalEventEstimate est;
  est.p = p;
  est.n = n;
  est.total = n * n;
  const std::uint64_t multiples = n / p;
  for (std::uint64_t s = 1; s <= multiples; ++s) {
    for (std::uint64_t t = 1; t <= multiples; ++t) {
      const std::uint64_t a = p * s;
      const std::uint64_t b = p * t;
      const std::uint64_t d = detail::binary_gcd(a, b);
      if (((a + b) / d) % p == 0) ++est.event_count;
    }
  }
  est.density = static_cast<long double>(est.event_count) / static_cast<long double>(est.total);
  est.target = 1.0L / (static_cast<long double>(p) * p * (p + 1));
  return est;
}

}  // namespace gcdint
