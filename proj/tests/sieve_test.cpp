#include "gcdint/sieve.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

using gcdint::SieveTables;

namespace {

// Trial-division oracles straight from the definitions.
std::uint64_t phi_oracle(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

std::uint64_t sigma_oracle(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += d;
  }
  return s;
}

int mu_oracle(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

}  // namespace

TEST(Sieve, LimitTen) {
  const auto t = SieveTables::build(10);
  const std::vector<std::uint32_t> phi{1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
  const std::vector<std::uint64_t> sigma{1, 3, 4, 7, 6, 12, 8, 15, 13, 18};
  for (std::uint32_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(t.phi(n), phi[n - 1]) << n;
    EXPECT_EQ(t.sigma(n), sigma[n - 1]) << n;
  }
  EXPECT_EQ(std::vector<std::uint32_t>(t.primes().begin(), t.primes().end()),
            (std::vector<std::uint32_t>{2, 3, 5, 7}));
}

TEST(Sieve, LimitOne) {
  const auto t = SieveTables::build(1);
  EXPECT_EQ(t.phi(1), 1u);
  EXPECT_EQ(t.sigma(1), 1u);
  EXPECT_EQ(t.mu(1), 1);
  EXPECT_TRUE(t.primes().empty());
}

TEST(Sieve, MobiusSquarefreeParity) {
  const auto t = SieveTables::build(30);
  EXPECT_EQ(t.mu(30), -1);
  EXPECT_EQ(t.mu(12), 0);
  EXPECT_EQ(t.mu(6), 1);
}

TEST(Sieve, RejectsZeroAndHugeLimits) {
  EXPECT_THROW(SieveTables::build(0), std::invalid_argument);
  EXPECT_THROW(SieveTables::build(std::uint64_t{1} << 33), std::invalid_argument);
}

TEST(Sieve, MatchesTrialDivisionOracles) {
  const auto t = SieveTables::build(1000);
  for (std::uint32_t n = 1; n <= 1000; ++n) {
    ASSERT_EQ(t.phi(n), phi_oracle(n)) << n;
    ASSERT_EQ(t.sigma(n), sigma_oracle(n)) << n;
    ASSERT_EQ(t.mu(n), mu_oracle(n)) << n;
    std::uint32_t spf = 2;
    while (n > 1 && n % spf != 0) ++spf;
    if (n > 1) ASSERT_EQ(t.spf(n), spf) << n;
  }
}

TEST(Sieve, PrimeValuesAndMultiplicativity) {
  const auto t = SieveTables::build(5000);
  for (const auto p : t.primes()) {
    ASSERT_EQ(t.phi(p), p - 1);
    ASSERT_EQ(t.sigma(p), std::uint64_t{p} + 1);
    ASSERT_EQ(t.mu(p), -1);
    ASSERT_EQ(t.spf(p), p);
  }
  for (std::uint32_t m = 1; m <= 70; ++m) {
    for (std::uint32_t n = 1; n <= 70; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ASSERT_EQ(t.phi(m * n), t.phi(m) * t.phi(n));
      ASSERT_EQ(t.sigma(m * n), t.sigma(m) * t.sigma(n));
      ASSERT_EQ(t.mu(m * n), t.mu(m) * t.mu(n));
    }
  }
}

TEST(Sieve, MuZeroIffSquareFactor) {
  const auto t = SieveTables::build(20000);
  for (std::uint32_t n = 1; n <= 20000; ++n) {
    bool square = false;
    for (std::uint32_t p = 2; p * p <= n && !square; ++p) square = n % (p * p) == 0;
    ASSERT_EQ(t.mu(n) == 0, square) << n;
  }
}

TEST(Sieve, TotientDivisorSumIsIdentity) {
  const auto t = SieveTables::build(10000);
  std::vector<std::uint64_t> sum(10001, 0);
  for (std::uint32_t d = 1; d <= 10000; ++d) {
    for (std::uint32_t m = d; m <= 10000; m += d) sum[m] += t.phi(d);
  }
  for (std::uint32_t n = 1; n <= 10000; ++n) ASSERT_EQ(sum[n], n);
}

TEST(Sieve, PhiSigmaBoundedBySquare) {
  const auto t = SieveTables::build(1'000'000);
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const std::uint64_t prod = std::uint64_t{t.phi(n)} * t.sigma(n);
    if (n == 1) {
      ASSERT_EQ(prod, 1u);
    } else {
      ASSERT_LT(prod, n * n) << n;
    }
  }
}

TEST(Mertens, PrefixValues) {
  const auto m = gcdint::mertens_prefix(SieveTables::build(10));
  EXPECT_EQ(m[1], 1);
  EXPECT_EQ(m[2], 0);
  EXPECT_EQ(m[3], -1);
  EXPECT_EQ(m[5], -2);
  EXPECT_EQ(m[10], -1);
}
