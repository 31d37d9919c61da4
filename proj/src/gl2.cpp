#include "gcdint/gl2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "gcdint/arith.hpp"
#include "gcdint/density.hpp"

namespace gcdint::gl2 {

namespace {

std::uint16_t mod_mul_add(std::uint32_t x, std::uint32_t y, std::uint32_t u, std::uint32_t v, std::uint32_t n) {
  return static_cast<std::uint16_t>((x * y + u * v) % n);
}

// Inverse of a unit modulo n by the extended Euclidean algorithm.
std::uint16_t unit_inverse(std::uint32_t x, std::uint32_t n) {
  std::int64_t r0 = n, r1 = x % n;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) throw std::domain_error(std::to_string(x) + " is not a unit modulo " + std::to_string(n));
  const std::int64_t m = static_cast<std::int64_t>(n);
  return static_cast<std::uint16_t>(((s0 % m) + m) % m);
}

}  // namespace

Mat2 Mat2::identity(std::uint16_t n) {
  return Mat2{static_cast<std::uint16_t>(1 % n), 0, 0, static_cast<std::uint16_t>(1 % n), n};
}

std::uint16_t Mat2::det() const {
  const std::uint32_t n = modulus;
  return static_cast<std::uint16_t>((std::uint32_t{a} * d % n + n - std::uint32_t{b} * c % n) % n);
}

std::uint16_t Mat2::trace() const { return static_cast<std::uint16_t>((std::uint32_t{a} + d) % modulus); }

bool Mat2::invertible() const { return std::gcd(static_cast<unsigned>(det()), static_cast<unsigned>(modulus)) == 1; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  const std::uint32_t n = x.modulus;
  return Mat2{mod_mul_add(x.a, y.a, x.b, y.c, n), mod_mul_add(x.a, y.b, x.b, y.d, n),
              mod_mul_add(x.c, y.a, x.d, y.c, n), mod_mul_add(x.c, y.b, x.d, y.d, n), x.modulus};
}

Mat2 inverse(const Mat2& m) {
  const std::uint32_t n = m.modulus;
  const std::uint32_t k = unit_inverse(m.det(), n);
  auto neg = [n](std::uint32_t v) { return (n - v % n) % n; };
  return Mat2{static_cast<std::uint16_t>(k * m.d % n), static_cast<std::uint16_t>(k * neg(m.b) % n),
              static_cast<std::uint16_t>(k * neg(m.c) % n), static_cast<std::uint16_t>(k * m.a % n), m.modulus};
}

Mat2 companion(std::uint16_t t, std::uint16_t d, std::uint16_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2");
  return Mat2{0, static_cast<std::uint16_t>((n - d % n) % n), static_cast<std::uint16_t>(1 % n),
              static_cast<std::uint16_t>(t % n), n};
}

std::vector<GroupElement> enumerate_group(std::uint32_t n, bool force) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(n));
  if (n > kHardEnumerationCap) {
    throw std::length_error("modulus " + std::to_string(n) + " exceeds the hard enumeration cap " +
                            std::to_string(kHardEnumerationCap));
  }
  if (n > kDefaultEnumerationCap && !force) {
    throw std::length_error("modulus " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(kDefaultEnumerationCap) + "; pass force to accept the cost");
  }
  const auto mod = static_cast<std::uint16_t>(n);
  std::vector<GroupElement> group;
  for (std::uint16_t a = 0; a < mod; ++a) {
    for (std::uint16_t b = 0; b < mod; ++b) {
      for (std::uint16_t c = 0; c < mod; ++c) {
        for (std::uint16_t d = 0; d < mod; ++d) {
          const Mat2 m{a, b, c, d, mod};
          if (m.invertible()) group.push_back({m, inverse(m)});
        }
      }
    }
  }
  return group;
}

ConjugacyCount count_conjugacy_classes(std::uint32_t n, const SieveTables& tables, bool force) {
  if (n > tables.limit()) {
    throw std::invalid_argument("sieve limit " + std::to_string(tables.limit()) + " is below n = " +
                                std::to_string(n));
  }
  const auto group = enumerate_group(n, force);

  ConjugacyCount out;
  out.modulus = n;
  out.group_order = group.size();
  out.class_count_formula = std::uint64_t{tables.phi(n)} * tables.sigma(n);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(group.size() * 2);
  std::unordered_set<std::uint64_t> orbit;
  for (const auto& seed : group) {
    if (seen.contains(seed.m.packed())) continue;
    orbit.clear();
    for (const auto& x : group) orbit.insert((x.m * seed.m * x.inv).packed());
    seen.insert(orbit.begin(), orbit.end());
    out.class_sizes.push_back(orbit.size());
  }
  out.class_count_brute = out.class_sizes.size();
  return out;
}

ConjugacyCount count_conjugacy_classes(std::uint32_t n, bool force) {
  return count_conjugacy_classes(n, SieveTables::build(std::max<std::uint32_t>(n, 1)), force);
}

std::uint64_t prime_power_class_count(std::uint64_t p, unsigned alpha) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  if (alpha == 0) throw std::domain_error("alpha must be >= 1");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t low = 1;  // p^(alpha-1)
  for (unsigned i = 1; i < alpha; ++i) {
    if (low > kMax / p) throw std::overflow_error("p^(alpha-1) does not fit in 64 bits");
    low *= p;
  }
  if (low > kMax / p) throw std::overflow_error("p^alpha does not fit in 64 bits");
  const std::uint64_t pa = low * p;
  if (pa > kMax / pa) throw std::overflow_error("p^(2 alpha) does not fit in 64 bits");
  return pa * pa - low;
}

std::pair<std::uint16_t, std::uint16_t> trace_det_signature(const Mat2& m) { return {m.trace(), m.det()}; }

std::vector<ConvergenceRow> convergence_comparison(std::span<const std::uint64_t> n_values,
                                                   const SieveTables& tables, unsigned threads) {
  std::vector<ConvergenceRow> rows;
  if (n_values.empty()) return rows;
  const std::uint64_t top = *std::max_element(n_values.begin(), n_values.end());
  if (top > tables.limit()) {
    throw std::invalid_argument("n = " + std::to_string(top) + " exceeds sieve limit " +
                                std::to_string(tables.limit()));
  }
  // Kahan-summed prefix of phi(m) sigma(m) / m^2.
  std::vector<long double> prefix(top + 1, 0);
  long double sum = 0;
  long double carry = 0;
  for (std::uint64_t m = 1; m <= top; ++m) {
    const long double mm = static_cast<long double>(m);
    const long double term = static_cast<long double>(std::uint64_t{tables.phi(m)} * tables.sigma(m)) / (mm * mm) - carry;
    const long double t = sum + term;
    carry = (t - sum) - term;
    sum = t;
    prefix[m] = sum;
  }
  for (const std::uint64_t n : n_values) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    const auto report = density_report(n, kDefaultHistogramCap, threads);
    const long double nn = static_cast<long double>(n);
    rows.push_back(ConvergenceRow{n, report.ones_count, report.rho(),
                                  static_cast<long double>(std::uint64_t{tables.phi(n)} * tables.sigma(n)) / (nn * nn),
                                  prefix[n] / nn});
  }
  return rows;
}

}  // namespace gcdint::gl2
