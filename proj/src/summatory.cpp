#include "gcdint/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gcdint {

namespace {

std::uint64_t mertens_base(std::uint64_t x_max) {
  const auto cube_root_sq = static_cast<std::uint64_t>(std::ceil(std::cbrt(static_cast<long double>(x_max)) *
                                                                std::cbrt(static_cast<long double>(x_max))));
  return std::max<std::uint64_t>({cube_root_sq, isqrt(x_max) + 1, 64});
}

SummatoryResult finish(std::uint64_t x, std::uint64_t phi_sum, SummatoryMethod method) {
  SummatoryResult r;
  r.x = x;
  r.phi_sum = phi_sum;
  r.method = method;
  const long double xx = static_cast<long double>(x);
  r.main_term = 3.0L * xx * xx / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>);
  r.abs_error = std::fabs(static_cast<long double>(phi_sum) - r.main_term);
  r.normalized_error = r.abs_error / (xx * std::sqrt(xx));
  return r;
}

}  // namespace

std::string_view to_string(SummatoryMethod m) {
  return m == SummatoryMethod::sieve ? "sieve" : "hyperbola";
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

MertensCache::MertensCache(std::uint64_t x_max)
    : x_max_(x_max), tables_(SieveTables::build(mertens_base(x_max))), small_(mertens_prefix(tables_)) {}

std::int64_t MertensCache::operator()(std::uint64_t x) {
  if (x > x_max_) {
    throw std::invalid_argument("Mertens argument " + std::to_string(x) + " exceeds cache maximum " +
                                std::to_string(x_max_));
  }
  return large(x);
}

std::int64_t MertensCache::large(std::uint64_t v) {
  if (v < small_.size()) return small_[v];
  if (const auto it = large_.find(v); it != large_.end()) return it->second;
  std::int64_t m = 1;
  for (std::uint64_t d = 2; d <= v;) {
    const std::uint64_t q = v / d;
    const std::uint64_t d_hi = v / q;
    m -= static_cast<std::int64_t>(d_hi - d + 1) * large(q);
    d = d_hi + 1;
  }
  large_.emplace(v, m);
  return m;
}

SummatoryResult phi_sum_sieve(std::uint64_t x, const SieveTables& tables) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  if (x > tables.limit()) {
    throw std::invalid_argument("x = " + std::to_string(x) + " exceeds sieve limit " +
                                std::to_string(tables.limit()));
  }
  std::uint64_t sum = 0;
  const auto phi = tables.phi();
  for (std::uint64_t n = 1; n <= x; ++n) sum += phi[n];
  return finish(x, sum, SummatoryMethod::sieve);
}

SummatoryResult phi_sum_hyperbola(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  if (x > kMaxHyperbolaArgument) {
    throw std::overflow_error("x = " + std::to_string(x) + " exceeds the representable range (max " +
                              std::to_string(kMaxHyperbolaArgument) + ")");
  }
  MertensCache cache(x);
  const SieveTables& tables = cache.tables();
  auto mu = [&](std::uint64_t n) { return tables.mu(static_cast<std::uint32_t>(n)); };
  auto mertens_of = [&](std::uint64_t v) { return cache(v); };
  auto identity = [](std::uint64_t m) { return m; };
  auto triangular = [](std::uint64_t k) { return static_cast<i128>(k) * (k + 1) / 2; };
  const i128 total = hyperbola_sum(x, mu, mertens_of, identity, triangular);
  return finish(x, static_cast<std::uint64_t>(total), SummatoryMethod::hyperbola);
}

std::uint64_t coprime_pair_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("N must be >= 1");
  return 2 * phi_sum_hyperbola(n).phi_sum - 1;
}

std::vector<SummatoryResult> error_term_report(std::span<const std::uint64_t> x_values) {
  std::vector<SummatoryResult> out;
  out.reserve(x_values.size());
  for (const std::uint64_t x : x_values) {
    if (x < 2) throw std::invalid_argument("error-term report needs x >= 2, got " + std::to_string(x));
    out.push_back(phi_sum_hyperbola(x));
  }
  return out;
}

}  // namespace gcdint
