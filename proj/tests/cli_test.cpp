#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "gcdint/density.hpp"
#include "heatmap_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = gcdint::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const auto r = run_cli(std::move(args));
  EXPECT_EQ(r.status, 0) << r.err;
  return json::parse(r.out);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("gcdint_cli_test_" + name); }

}  // namespace

TEST(Cli, DensityReport) {
  const auto j = run_json({"density", "--n", "6"});
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "density");
  EXPECT_EQ(j["ones_count"], 29);
  EXPECT_EQ(j["total"], 36);
  EXPECT_EQ(j["rho"]["decimal_5"], "0.80556");
  EXPECT_EQ(j["rho"]["decimal"], "0.805556");
  EXPECT_EQ(j["histogram"].size(), 11u);
  EXPECT_EQ(j["histogram"][10]["value"], ">10");
}

TEST(Cli, DensityIsByteIdenticalAcrossThreadCounts) {
  const auto one = run_cli({"density", "--n", "300", "--threads", "1"});
  const auto four = run_cli({"density", "--n", "300", "--threads", "4"});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, run_cli({"density", "--n", "300", "--threads", "1"}).out);
}

TEST(Cli, DensityCsv) {
  const auto r = run_cli({"density", "--n", "6", "--format", "csv"});
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "count,value");
  EXPECT_EQ(first, "29,1");
}

TEST(Cli, Gl2) {
  const auto j = run_json({"gl2", "--n", "3"});
  EXPECT_EQ(j["class_count_brute"], 8);
  EXPECT_EQ(j["class_count_formula"], 8);
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(run_cli({"gl2", "--n", "13"}).status, gcdint::cli::kResourceError);
  EXPECT_EQ(run_cli({"gl2", "--n", "1"}).status, gcdint::cli::kInvalidArgument);
}

TEST(Cli, TotientSumBothMethods) {
  const auto j = run_json({"totient-sum", "--x", "10", "--method", "both"});
  EXPECT_EQ(j["phi_sum"], 32);
  EXPECT_EQ(j["agree"], true);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["method"], "sieve");
  EXPECT_EQ(j["results"][1]["method"], "hyperbola");
  EXPECT_EQ(j["results"][1]["phi_sum"], 32);
  EXPECT_EQ(run_cli({"totient-sum", "--x", "10", "--method", "guess"}).status, gcdint::cli::kInvalidArgument);
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run_json({"coprime", "--n", "10"})["count"], 63);
  EXPECT_EQ(run_json({"local", "--p", "2", "--n", "2"})["event_count"], 1);
  EXPECT_EQ(run_json({"witness", "--c-max", "1000"})["all_ok"], true);
  EXPECT_EQ(run_json({"euler", "--prime-limit", "3"})["estimate"]["value"], "0.891203703704");
  EXPECT_EQ(run_json({"euler", "--coprimality", "--prime-limit", "2"})["estimate"]["value"], "0.750000000000");
  const auto mean = run_json({"mean", "--n", "4", "--checkpoints", "1"});
  EXPECT_EQ(mean["checkpoints"].size(), 2u);
  EXPECT_EQ(mean["final_mean"], "0.878472222222");
  EXPECT_EQ(run_json({"convergence", "--n", "10,11", "--threads", "1"})["rows"][0]["class_ratio"], "0.720000");
  EXPECT_EQ(run_json({"error-term", "--x", "10,100"})["results"][1]["phi_sum"], 3044);
}

TEST(Cli, ErrorsHaveDistinctStatuses) {
  using namespace gcdint::cli;
  const auto unknown = run_cli({"density", "--n", "5", "--bogus"});
  EXPECT_EQ(unknown.status, kUsageError);
  EXPECT_NE(unknown.err.find("bogus"), std::string::npos);
  EXPECT_EQ(run_cli({}).status, kUsageError);
  EXPECT_EQ(run_cli({"nonsense"}).status, kUsageError);
  EXPECT_EQ(run_cli({"density", "--n", "0"}).status, kInvalidArgument);
  EXPECT_EQ(run_cli({"density", "--n", "abc"}).status, kUsageError);
  EXPECT_EQ(run_cli({"local", "--p", "4", "--n", "10"}).status, kInvalidArgument);
  EXPECT_EQ(run_cli({"euler", "--prime-limit", "1"}).status, kInvalidArgument);
  EXPECT_EQ(run_cli({"density", "--n", "5", "--format", "ppm"}).status, kInvalidArgument);
  EXPECT_EQ(run_cli({"mean", "--n", "10", "--checkpoints", "11"}).status, kInvalidArgument);
  const auto io = run_cli({"heatmap", "--n", "5", "--out", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(io.status, kIoError);
  EXPECT_NE(io.err.find("/nonexistent-dir/x.csv"), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).status, kOk);
}

TEST(Cli, ReportToFile) {
  const auto path = temp_path("density.json");
  const auto r = run_cli({"density", "--n", "6", "--out", path.string()});
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(slurp(path))["ones_count"], 29);
  fs::remove(path);
}

TEST(Cli, HeatmapCsvRoundTrips) {
  const auto path = temp_path("heat.csv");
  const auto j = run_json({"heatmap", "--n", "50", "--format", "csv", "--out", path.string()});
  std::ifstream in(path);
  const auto parsed = gcdint::io::parse_csv(in);
  EXPECT_EQ(parsed, gcdint::heatmap(50));
  EXPECT_EQ(j["ones_count"], gcdint::density_report(50).ones_count);
  fs::remove(path);
}

TEST(Cli, HeatmapPpm) {
  const auto path = temp_path("heat.ppm");
  ASSERT_EQ(run_cli({"heatmap", "--n", "1", "--format", "ppm", "--out", path.string()}).status, 0);
  EXPECT_EQ(slurp(path), std::string("P6\n1 1\n255\n\xff\xff\xff", 14));

  ASSERT_EQ(run_cli({"heatmap", "--n", "3", "--format", "ppm", "--out", path.string()}).status, 0);
  const std::string img = slurp(path);
  const std::string header = "P6\n3 3\n255\n";
  ASSERT_EQ(img.size(), header.size() + 27);
  const auto pixel = [&](int row, int col) {
    const std::size_t at = header.size() + static_cast<std::size_t>((row * 3 + col) * 3);
    return gcdint::io::Rgb{static_cast<std::uint8_t>(img[at]), static_cast<std::uint8_t>(img[at + 1]),
                           static_cast<std::uint8_t>(img[at + 2])};
  };
  EXPECT_EQ(pixel(1, 1), gcdint::io::palette_color(2));
  EXPECT_EQ(pixel(0, 0), gcdint::io::kColorOne);

  ASSERT_EQ(run_cli({"heatmap", "--n", "50", "--format", "ppm", "--out", path.string()}).status, 0);
  const std::string first = slurp(path);
  ASSERT_EQ(run_cli({"heatmap", "--n", "50", "--format", "ppm", "--out", path.string()}).status, 0);
  EXPECT_EQ(slurp(path), first);
  fs::remove(path);
}

TEST(HeatmapIo, PaletteClasses) {
  using namespace gcdint::io;
  EXPECT_EQ(palette_color(1), (Rgb{255, 255, 255}));
  EXPECT_EQ(palette_color(2), (Rgb{204, 204, 255}));
  EXPECT_EQ(palette_color(10), (Rgb{153, 153, 153}));
  EXPECT_EQ(palette_color(11), kColorAboveTen);
  EXPECT_EQ(palette_color(500), kColorAboveTen);
}

TEST(HeatmapIo, MalformedCsvIsRejected) {
  using gcdint::io::parse_csv;
  std::istringstream empty("");
  EXPECT_THROW(parse_csv(empty), std::runtime_error);
  std::istringstream bad_header("x,1,2\n1,1,1\n2,1,2\n");
  EXPECT_THROW(parse_csv(bad_header), std::runtime_error);
  std::istringstream short_row("a,1,2\n1,1\n2,1,2\n");
  EXPECT_THROW(parse_csv(short_row), std::runtime_error);
  std::istringstream bad_value("a,1,2\n1,1,z\n2,1,2\n");
  EXPECT_THROW(parse_csv(bad_value), std::runtime_error);
  std::istringstream good("a,1,2\n1,1,1\n2,1,2\n");
  EXPECT_EQ(parse_csv(good), gcdint::heatmap(2));
}
