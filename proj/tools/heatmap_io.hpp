#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "gcdint/density.hpp"

namespace gcdint::io {

struct Rgb {
  std::uint8_t r, g, b;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Legend classes of the reference heat map, as xcolor tints over white
// (blue!20, blue!40, green!20, green!40, orange!30, red!30, purple!30,
// cyan!30, gray!80, black!10), rounded half up.
inline constexpr Rgb kColorOne{255, 255, 255};
inline constexpr std::array<Rgb, 9> kColorTwoToTen{{
    {204, 204, 255},  // 2
    {153, 153, 255},  // 3
    {204, 255, 204},  // 4
    {153, 255, 153},  // 5
    {255, 217, 179},  // 6
    {255, 179, 179},  // 7
    {236, 179, 198},  // 8
    {179, 255, 255},  // 9
    {153, 153, 153},  // 10
}};
inline constexpr Rgb kColorAboveTen{230, 230, 230};

Rgb palette_color(std::uint32_t value);

/// Binary P6, one pixel per cell, grid row i on image row i - 1.
void write_ppm(const HeatmapGrid& grid, std::ostream& out);

/// Header "a,1,2,...,n", then one line per row a: "a,f(a,1),...,f(a,n)".
void write_csv(const HeatmapGrid& grid, std::ostream& out);

/// Inverse of write_csv. Throws std::runtime_error on malformed input.
HeatmapGrid parse_csv(std::istream& in);

enum class HeatmapFormat { csv, ppm };

/// Throws std::runtime_error naming the path when the file cannot be written.
void write_file(const HeatmapGrid& grid, HeatmapFormat format, const std::filesystem::path& path);

}  // namespace gcdint::io
