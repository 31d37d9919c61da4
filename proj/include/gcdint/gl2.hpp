#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gcdint/sieve.hpp"

namespace gcdint::gl2 {

/// A 2x2 matrix [[a, b], [c, d]] over Z/nZ. Entries are reduced residues.
struct Mat2 {
  std::uint16_t a = 0;
  std::uint16_t b = 0;
  std::uint16_t c = 0;
  std::uint16_t d = 0;
  std::uint16_t modulus = 1;

  static Mat2 identity(std::uint16_t n);

  std::uint16_t det() const;
  std::uint16_t trace() const;
  bool invertible() const;

  /// Four 16-bit residues in one word; the modulus is not part of the key.
  std::uint64_t packed() const {
    return std::uint64_t{a} | std::uint64_t{b} << 16 | std::uint64_t{c} << 32 | std::uint64_t{d} << 48;
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Inverse of an invertible matrix; throws std::domain_error otherwise.
Mat2 inverse(const Mat2& m);

/// [[0, -d], [1, t]], the companion matrix of x^2 - t x + d.
Mat2 companion(std::uint16_t t, std::uint16_t d, std::uint16_t n);

struct GroupElement {
  Mat2 m;
  Mat2 inv;
};

inline constexpr std::uint16_t kDefaultEnumerationCap = 12;
inline constexpr std::uint16_t kHardEnumerationCap = 255;

/// All of GL(2, Z/nZ) in lexicographic (a, b, c, d) order. n above the
/// default cap needs force = true; nothing above kHardEnumerationCap is
/// accepted. Violations throw std::length_error; n < 2 throws
/// std::invalid_argument.
std::vector<GroupElement> enumerate_group(std::uint32_t n, bool force = false);

struct ConjugacyCount {
  std::uint32_t modulus = 0;
  std::uint64_t group_order = 0;
  std::uint64_t class_count_brute = 0;
  std::uint64_t class_count_formula = 0;  // phi(n) sigma(n)
  std::vector<std::uint64_t> class_sizes;

  bool matches() const { return class_count_brute == class_count_formula; }
};

/// Orbit partition of the group under x g x^-1, compared with phi(n) sigma(n)
/// read from `tables` (whose limit must be >= n).
ConjugacyCount count_conjugacy_classes(std::uint32_t n, const SieveTables& tables, bool force = false);
ConjugacyCount count_conjugacy_classes(std::uint32_t n, bool force = false);

/// p^(2 alpha) - p^(alpha - 1). Throws std::domain_error for composite p or
/// alpha == 0, std::overflow_error when the result does not fit.
std::uint64_t prime_power_class_count(std::uint64_t p, unsigned alpha);

/// (trace, det) modulo n. Conjugate matrices share it; distinct classes may too.
std::pair<std::uint16_t, std::uint16_t> trace_det_signature(const Mat2& m);

struct ConvergenceRow {
  std::uint64_t n = 0;
  std::uint64_t ones_count = 0;
  long double rho_n = 0;
  /// phi(n) sigma(n) / n^2, the class count scaled by n^2.
  long double class_ratio = 0;
  /// (1/n) sum_{m<=n} phi(m) sigma(m) / m^2.
  long double running_mean = 0;
};

/// Side-by-side rho_n, phi(n) sigma(n)/n^2 and its Cesaro mean. The pointwise
/// ratio oscillates (it is close to 1 at primes); only the mean tracks rho.
std::vector<ConvergenceRow> convergence_comparison(std::span<const std::uint64_t> n_values,
                                                   const SieveTables& tables, unsigned threads = 0);

}  // namespace gcdint::gl2
