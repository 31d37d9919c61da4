#include "gcdint/arith.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace gcdint {

namespace {

constexpr u64 kMax = std::numeric_limits<u64>::max();

// Checked base^exp in 128 bits.
bool checked_pow(u64 base, unsigned exp, u128& out) {
  constexpr u128 kWideMax = ~u128{0};
  u128 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > kWideMax / base) return false;
    result *= base;
  }
  out = result;
  return true;
}

}  // namespace

Pair Pair::make(u64 a, u64 b) {
  if (a == 0 || b == 0) {
    throw std::domain_error("pair entries must be positive, got (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
  }
  return Pair{a, b};
}

u64 gcd(u64 x, u64 y) {
  if (x == 0 && y == 0) throw std::domain_error("gcd(0, 0) is undefined");
  return detail::binary_gcd(x, y);
}

u64 f(Pair p) {
  if (p.a == 0 || p.b == 0) throw std::domain_error("f requires positive arguments");
  if (p.a > kMax - p.b) throw std::overflow_error("a + b does not fit in 64 bits");
  return detail::f_unchecked(p.a, p.b);
}

u64 f_textbook(Pair p) {
  if (p.a == 0 || p.b == 0) throw std::domain_error("f requires positive arguments");
  if ((p.a >> 63) != 0 || (p.b >> 63) != 0) throw std::overflow_error("textbook form needs a, b < 2^63");
  const u128 sum = u128{p.a} + p.b;
  const u128 prod = u128{p.a} * p.b;
  const u128 num = detail::binary_gcd_wide(sum, prod);
  return static_cast<u64>(num / detail::binary_gcd(p.a, p.b));
}

u64 f_r(Pair p, unsigned r) {
  if (p.a == 0 || p.b == 0) throw std::domain_error("f_r requires positive arguments");
  if (r == 0) throw std::domain_error("f_r requires r >= 1");
  u128 ar = 0;
  u128 br = 0;
  if (!checked_pow(p.a, r, ar) || !checked_pow(p.b, r, br) || ar > ~u128{0} - br) {
    throw std::overflow_error("a^r + b^r does not fit in 128 bits (r = " + std::to_string(r) + ")");
  }
  const u128 num = detail::binary_gcd_wide(ar + br, u128{p.a} * p.b);
  return static_cast<u64>(num / detail::binary_gcd(p.a, p.b));
}

Pair surjectivity_witness(u64 c) {
  if (c < 2) throw std::domain_error("surjectivity witness requires c >= 2, got " + std::to_string(c));
  if (c > kMax / c) throw std::overflow_error("c^2 does not fit in 64 bits");
  return Pair{c, c * c - c};
}

GcdDecomposition decompose(Pair p) {
  if (p.a == 0 || p.b == 0) throw std::domain_error("decompose requires positive arguments");
  const u64 d = detail::binary_gcd(p.a, p.b);
  return GcdDecomposition{d, p.a / d, p.b / d};
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 k = 3; k <= n / k; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

}  // namespace gcdint
