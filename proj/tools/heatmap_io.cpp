#include "heatmap_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcdint::io {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::uint32_t parse_uint(const std::string& s, std::size_t line_no) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::runtime_error("heat map CSV line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Rgb palette_color(std::uint32_t value) {
  if (value <= 1) return kColorOne;
  if (value <= 10) return kColorTwoToTen[value - 2];
  return kColorAboveTen;
}

void write_ppm(const HeatmapGrid& grid, std::ostream& out) {
  out << "P6\n" << grid.n << ' ' << grid.n << "\n255\n";
  std::vector<char> row(std::size_t{grid.n} * 3);
  for (std::uint32_t i = 1; i <= grid.n; ++i) {
    for (std::uint32_t j = 1; j <= grid.n; ++j) {
      const Rgb c = palette_color(grid.at(i, j));
      row[(j - 1) * 3 + 0] = static_cast<char>(c.r);
      row[(j - 1) * 3 + 1] = static_cast<char>(c.g);
      row[(j - 1) * 3 + 2] = static_cast<char>(c.b);
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

void write_csv(const HeatmapGrid& grid, std::ostream& out) {
  out << 'a';
  for (std::uint32_t j = 1; j <= grid.n; ++j) out << ',' << j;
  out << '\n';
  for (std::uint32_t i = 1; i <= grid.n; ++i) {
    out << i;
    for (std::uint32_t j = 1; j <= grid.n; ++j) out << ',' << grid.at(i, j);
    out << '\n';
  }
}

HeatmapGrid parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("heat map CSV is empty");
  const auto header = split_fields(line);
  if (header.size() < 2 || header[0] != "a") throw std::runtime_error("heat map CSV has a malformed header");
  HeatmapGrid grid;
  grid.n = static_cast<std::uint32_t>(header.size() - 1);
  for (std::uint32_t j = 1; j <= grid.n; ++j) {
    if (parse_uint(header[j], 1) != j) throw std::runtime_error("heat map CSV header columns out of order");
  }
  grid.values.reserve(std::size_t{grid.n} * grid.n);
  std::size_t line_no = 1;
  for (std::uint32_t i = 1; i <= grid.n; ++i) {
    ++line_no;
    if (!std::getline(in, line)) throw std::runtime_error("heat map CSV is missing row " + std::to_string(i));
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw std::runtime_error("heat map CSV line " + std::to_string(line_no) + " has " +
                               std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(header.size()));
    }
    if (parse_uint(fields[0], line_no) != i) throw std::runtime_error("heat map CSV rows out of order");
    for (std::uint32_t j = 1; j <= grid.n; ++j) grid.values.push_back(parse_uint(fields[j], line_no));
  }
  while (std::getline(in, line)) {
    if (!line.empty()) throw std::runtime_error("heat map CSV has trailing rows");
  }
  return grid;
}

void write_file(const HeatmapGrid& grid, HeatmapFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  if (format == HeatmapFormat::ppm) {
    write_ppm(grid, out);
  } else {
    write_csv(grid, out);
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace gcdint::io
