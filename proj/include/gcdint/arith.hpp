#pragma once

#include <bit>
#include <concepts>
#include <cstdint>

namespace gcdint {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// An ordered pair of positive integers, the argument of f and f_r.
struct Pair {
  u64 a;
  u64 b;

  /// Throws std::domain_error unless a >= 1 and b >= 1.
  static Pair make(u64 a, u64 b);

  friend bool operator==(const Pair&, const Pair&) = default;
};

/// a = d * a_prime, b = d * b_prime with gcd(a_prime, b_prime) = 1.
struct GcdDecomposition {
  u64 d;
  u64 a_prime;
  u64 b_prime;

  friend bool operator==(const GcdDecomposition&, const GcdDecomposition&) = default;
};

namespace detail {

// Binary gcd, no domain check. gcd(0, y) = y.
template <std::unsigned_integral T>
constexpr T binary_gcd(T x, T y) noexcept {
  if (x == 0) return y;
  if (y == 0) return x;
  const int shift = std::countr_zero(x | y);
  x >>= std::countr_zero(x);
  do {
    y >>= std::countr_zero(y);
    if (x > y) {
      const T t = x;
      x = y;
      y = t;
    }
    y -= x;
  } while (y != 0);
  return x << shift;
}

// std::countr_zero has no overload for unsigned __int128.
constexpr u128 binary_gcd_wide(u128 x, u128 y) noexcept {
  auto ctz = [](u128 v) {
    const auto lo = static_cast<u64>(v);
    return lo != 0 ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<u64>(v >> 64));
  };
  if (x == 0) return y;
  if (y == 0) return x;
  const int shift = ctz(x | y);
  x >>= ctz(x);
  do {
    y >>= ctz(y);
    if (x > y) {
      const u128 t = x;
      x = y;
      y = t;
    }
    y -= x;
  } while (y != 0);
  return x << shift;
}

// f on the reduced form. Requires a, b >= 1 and a + b representable.
constexpr u64 f_unchecked(u64 a, u64 b) noexcept {
  const u64 g = binary_gcd(a, b);
  if (g == 1) return 1;
  return binary_gcd((a + b) / g, g);
}

}  // namespace detail

/// Greatest common divisor. gcd(x, 0) = x; throws std::domain_error for (0, 0).
u64 gcd(u64 x, u64 y);

/// f(a,b) = gcd(a+b, ab) / gcd(a,b), evaluated as gcd((a+b)/g, g) so ab is
/// never formed. Throws std::overflow_error if a + b does not fit in 64 bits.
u64 f(Pair p);

/// The textbook quotient gcd(a+b, ab) / gcd(a,b) in 128-bit arithmetic.
/// Kept as a cross-check for the reduced form; a and b must be < 2^63.
u64 f_textbook(Pair p);

/// f_r(a,b) = gcd(a^r + b^r, ab) / gcd(a,b). a^r + b^r is evaluated in
/// 128-bit arithmetic; throws std::overflow_error when it does not fit and
/// std::domain_error for r = 0.
u64 f_r(Pair p, unsigned r);

/// (c, c^2 - c), for which f = c. Rejects c < 2 (b would be 0; f(1,1) = 1
/// already attains the value 1) and c large enough that c^2 overflows.
Pair surjectivity_witness(u64 c);

GcdDecomposition decompose(Pair p);

/// Deterministic trial-division primality test.
bool is_prime(u64 n);

}  // namespace gcdint
