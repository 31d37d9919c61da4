#include "gcdint/format.hpp"

#include <cstdio>
#include <stdexcept>

namespace gcdint {

namespace {

using u128 = unsigned __int128;

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace

std::string format_fraction(std::uint64_t num, std::uint64_t den, int places) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (places < 0 || places > 18) throw std::invalid_argument("places must be in [0, 18]");
  u128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round(num * scale / den), half up
  const u128 scaled = (u128{num} * scale * 2 + den) / (u128{den} * 2);
  const u128 whole = scaled / scale;
  std::string out = u128_to_string(whole);
  if (places > 0) {
    std::string frac = u128_to_string(scaled % scale);
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string format_fraction_trimmed(std::uint64_t num, std::uint64_t den, int places) {
  std::string s = format_fraction(num, den, places);
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string format_decimal(long double value, int places) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*Lf", places, value);
  return buf;
}

std::string format_scientific(long double value, int places) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*Le", places, value);
  return buf;
}

}  // namespace gcdint
