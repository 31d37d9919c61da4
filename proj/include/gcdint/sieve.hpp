#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gcdint {

/// Immutable tables of phi, sigma, mu and smallest prime factor for 1..limit,
/// plus the primes up to limit. All per-n arrays are indexed by n itself;
/// slot 0 is unused.
class SieveTables {
 public:
  /// Single linear sieve pass. Throws std::invalid_argument for limit == 0
  /// or limit >= 2^32.
  static SieveTables build(std::uint64_t limit);

  std::uint32_t limit() const noexcept { return limit_; }

  std::uint32_t phi(std::uint32_t n) const { return phi_[n]; }
  std::uint64_t sigma(std::uint32_t n) const { return sigma_[n]; }
  int mu(std::uint32_t n) const { return mu_[n]; }
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }

  std::span<const std::uint32_t> phi() const noexcept { return phi_; }
  std::span<const std::uint64_t> sigma() const noexcept { return sigma_; }
  std::span<const std::int8_t> mu() const noexcept { return mu_; }
  std::span<const std::uint32_t> spf() const noexcept { return spf_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

 private:
  SieveTables() = default;

  std::uint32_t limit_ = 0;
  std::vector<std::uint32_t> phi_;
  std::vector<std::uint64_t> sigma_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Prefix sums M(x) = sum_{n<=x} mu(n) for 0 <= x <= tables.limit(); M(0) = 0.
std::vector<std::int64_t> mertens_prefix(const SieveTables& tables);

}  // namespace gcdint
