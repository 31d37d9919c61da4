#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gcdint::cli {

enum class Subcommand {
  density,
  heatmap,
  local,
  euler,
  mean,
  gl2,
  totient_sum,
  coprime,
  witness,
  convergence,
  error_term,
};

enum class OutputFormat { json, csv, ppm };

/// Everything a subcommand needs, validated before any computation starts.
struct RunConfig {
  Subcommand subcommand = Subcommand::density;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t x = 0;
  std::uint64_t c_max = 0;
  std::uint64_t histogram_cap = 10;
  std::uint64_t prime_limit = 100000;
  bool coprimality = false;
  bool force = false;
  std::string method = "both";
  std::vector<std::uint64_t> values;  // checkpoints, n list or x list
  unsigned threads = 0;               // 0 = auto
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output_path;
};

/// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kInvalidArgument = 3;
inline constexpr int kResourceError = 4;
inline constexpr int kIoError = 5;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (or --out), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gcdint::cli
