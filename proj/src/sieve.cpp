#include "gcdint/sieve.hpp"

#include <limits>
#include <new>
#include <stdexcept>
#include <string>

namespace gcdint {

SieveTables SieveTables::build(std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("sieve limit must be >= 1");
  if (limit >= std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("sieve limit " + std::to_string(limit) + " exceeds 32-bit range");
  }
  const auto n = static_cast<std::uint32_t>(limit);

  SieveTables t;
  t.limit_ = n;
  try {
    t.phi_.assign(std::size_t{n} + 1, 0);
    t.sigma_.assign(std::size_t{n} + 1, 0);
    t.mu_.assign(std::size_t{n} + 1, 0);
    t.spf_.assign(std::size_t{n} + 1, 0);
  } catch (const std::bad_alloc&) {
    throw std::runtime_error("out of memory allocating sieve tables for limit " + std::to_string(n));
  }
  // 1 + p + ... + p^k for the smallest-prime power part of each n.
  std::vector<std::uint64_t> spf_power_sum(std::size_t{n} + 1, 0);

  t.phi_[1] = 1;
  t.sigma_[1] = 1;
  t.mu_[1] = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = i;
      t.primes_.push_back(i);
      t.phi_[i] = i - 1;
      t.sigma_[i] = std::uint64_t{i} + 1;
      t.mu_[i] = -1;
      spf_power_sum[i] = std::uint64_t{i} + 1;
    }
    for (const std::uint32_t p : t.primes_) {
      if (p > t.spf_[i] || std::uint64_t{p} * i > n) break;
      const std::uint32_t m = p * i;
      t.spf_[m] = p;
      if (p == t.spf_[i]) {
        t.phi_[m] = t.phi_[i] * p;
        t.mu_[m] = 0;
        spf_power_sum[m] = spf_power_sum[i] * p + 1;
        t.sigma_[m] = t.sigma_[i] / spf_power_sum[i] * spf_power_sum[m];
      } else {
        t.phi_[m] = t.phi_[i] * (p - 1);
        t.mu_[m] = static_cast<std::int8_t>(-t.mu_[i]);
        spf_power_sum[m] = std::uint64_t{p} + 1;
        t.sigma_[m] = t.sigma_[i] * (std::uint64_t{p} + 1);
      }
    }
  }
  return t;
}

std::vector<std::int64_t> mertens_prefix(const SieveTables& tables) {
  std::vector<std::int64_t> m(std::size_t{tables.limit()} + 1, 0);
  const auto mu = tables.mu();
  for (std::size_t x = 1; x < m.size(); ++x) m[x] = m[x - 1] + mu[x];
  return m;
}

}  // namespace gcdint
