#pragma once

#include <cstdint>
#include <string>

namespace gcdint {

/// Decimal rendering of num/den rounded half-up to `places` digits, computed
/// exactly in integer arithmetic. 29/36 at 5 places gives "0.80556".
std::string format_fraction(std::uint64_t num, std::uint64_t den, int places);

/// Same, but drops trailing zeros the way printed tables do ("0.75", "1").
std::string format_fraction_trimmed(std::uint64_t num, std::uint64_t den, int places);

/// Fixed-point rendering of a floating value ("%.*Lf").
std::string format_decimal(long double value, int places);

/// Scientific rendering for small magnitudes such as tail bounds.
std::string format_scientific(long double value, int places);

}  // namespace gcdint
