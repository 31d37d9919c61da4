#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gcdint/analytic.hpp"
#include "gcdint/arith.hpp"
#include "gcdint/density.hpp"
#include "gcdint/format.hpp"
#include "gcdint/gl2.hpp"
#include "gcdint/sieve.hpp"
#include "gcdint/summatory.hpp"
#include "heatmap_io.hpp"

namespace gcdint::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr int kRatioPlaces = 6;
constexpr int kValuePlaces = 12;

// Caps that keep a single run within minutes and within memory.
constexpr std::uint64_t kMaxDensityN = 1'000'000;
constexpr std::uint64_t kMaxHeatmapN = 4096;
constexpr std::uint64_t kMaxSieveLimit = 200'000'000;
constexpr std::uint64_t kMaxPrimeLimit = 200'000'000;
constexpr std::uint64_t kMaxWitnessC = 4'000'000'000ULL;
constexpr std::uint64_t kMaxWitnessListing = 100'000;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json fraction_json(std::uint64_t num, std::uint64_t den) {
  return json{{"numerator", num},
              {"denominator", den},
              {"decimal", format_fraction(num, den, kRatioPlaces)},
              {"decimal_5", format_fraction_trimmed(num, den, 5)}};
}

json header(std::string_view command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

// --- CSV rendering -------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const json& obj, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else if (!value.is_array()) {
      out.emplace_back(name, scalar_text(value));
    }
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

// One row of top-level scalars, or one row per element of `list_key`.
std::string to_csv(const json& report, const std::string& list_key) {
  std::vector<json> rows;
  if (list_key.empty()) {
    rows.push_back(report);
  } else {
    for (const auto& item : report.at(list_key)) rows.push_back(item);
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& row : rows) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(row, "", cells);
    if (first) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_quote(cells[i].first);
      os << '\n';
      first = false;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_quote(cells[i].second);
    os << '\n';
  }
  return os.str();
}

// --- validation ----------------------------------------------------------

void require_range(const char* flag, std::uint64_t v, std::uint64_t lo, std::uint64_t hi) {
  if (v < lo || v > hi) {
    throw std::invalid_argument(std::string(flag) + " must be in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "], got " + std::to_string(v));
  }
}

void validate(const RunConfig& cfg) {
  const bool image = cfg.subcommand == Subcommand::heatmap;
  if (!image && cfg.format == OutputFormat::ppm) {
    throw std::invalid_argument("--format ppm is only available for heatmap");
  }
  if (image && cfg.format == OutputFormat::json) {
    throw std::invalid_argument("heatmap --format must be csv or ppm");
  }
  switch (cfg.subcommand) {
    case Subcommand::density:
      require_range("--n", cfg.n, 1, kMaxDensityN);
      require_range("--histogram-cap", cfg.histogram_cap, 1, 1u << 20);
      break;
    case Subcommand::heatmap:
      require_range("--n", cfg.n, 1, kMaxHeatmapN);
      if (!cfg.output_path) throw std::invalid_argument("heatmap requires --out");
      break;
    case Subcommand::local:
      require_range("--n", cfg.n, 1, kMaxDensityN);
      if (!is_prime(cfg.p)) throw std::invalid_argument("--p must be prime, got " + std::to_string(cfg.p));
      break;
    case Subcommand::euler:
      require_range("--prime-limit", cfg.prime_limit, 2, kMaxPrimeLimit);
      break;
    case Subcommand::mean:
      require_range("--n", cfg.n, 1, kMaxSieveLimit);
      for (const auto c : cfg.values) require_range("--checkpoints", c, 1, cfg.n);
      break;
    case Subcommand::gl2:
      require_range("--n", cfg.n, 2, gl2::kHardEnumerationCap);
      if (cfg.n > gl2::kDefaultEnumerationCap && !cfg.force) {
        throw std::length_error("gl2 --n " + std::to_string(cfg.n) + " exceeds the enumeration cap " +
                                std::to_string(gl2::kDefaultEnumerationCap) + "; pass --force to accept the cost");
      }
      break;
    case Subcommand::totient_sum:
      if (cfg.method != "sieve" && cfg.method != "hyperbola" && cfg.method != "both") {
        throw std::invalid_argument("--method must be sieve, hyperbola or both");
      }
      require_range("--x", cfg.x, 1, cfg.method == "hyperbola" ? kMaxHyperbolaArgument : kMaxSieveLimit);
      break;
    case Subcommand::coprime:
      require_range("--n", cfg.n, 1, kMaxHyperbolaArgument / 2);
      break;
    case Subcommand::witness:
      require_range("--c-max", cfg.c_max, 2, kMaxWitnessC);
      break;
    case Subcommand::convergence:
      if (cfg.values.empty()) throw std::invalid_argument("--n needs at least one value");
      for (const auto v : cfg.values) require_range("--n", v, 1, kMaxDensityN);
      break;
    case Subcommand::error_term:
      if (cfg.values.empty()) throw std::invalid_argument("--x needs at least one value");
      for (const auto v : cfg.values) require_range("--x", v, 2, kMaxHyperbolaArgument);
      break;
  }
}

// --- subcommands ---------------------------------------------------------

json run_density(const RunConfig& cfg) {
  const auto r = density_report(cfg.n, cfg.histogram_cap, cfg.threads);
  json j = header("density");
  j["n"] = r.n;
  j["ones_count"] = r.ones_count;
  j["total"] = r.total;
  j["rho"] = fraction_json(r.ones_count, r.total);
  j["histogram_cap"] = r.histogram_cap;
  json hist = json::array();
  for (std::uint64_t v = 1; v <= r.histogram_cap; ++v) {
    hist.push_back(json{{"value", std::to_string(v)}, {"count", r.histogram[v]}});
  }
  hist.push_back(json{{"value", ">" + std::to_string(r.histogram_cap)}, {"count", r.overflow}});
  j["histogram"] = hist;
  return j;
}

json run_heatmap(const RunConfig& cfg) {
  const auto grid = heatmap(static_cast<std::uint32_t>(cfg.n));
  const auto format = cfg.format == OutputFormat::ppm ? io::HeatmapFormat::ppm : io::HeatmapFormat::csv;
  try {
    io::write_file(grid, format, *cfg.output_path);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  const auto ones = static_cast<std::uint64_t>(std::count(grid.values.begin(), grid.values.end(), 1u));
  json j = header("heatmap");
  j["n"] = cfg.n;
  j["format"] = format == io::HeatmapFormat::ppm ? "ppm" : "csv";
  j["path"] = *cfg.output_path;
  j["ones_count"] = ones;
  j["rho"] = fraction_json(ones, cfg.n * cfg.n);
  return j;
}

json run_local(const RunConfig& cfg) {
  const auto est = local_event_density(cfg.p, cfg.n);
  const std::uint64_t target_den = cfg.p * cfg.p * (cfg.p + 1);
  json j = header("local");
  j["p"] = est.p;
  j["n"] = est.n;
  j["event_count"] = est.event_count;
  j["total"] = est.total;
  j["density"] = fraction_json(est.event_count, est.total);
  j["target"] = fraction_json(1, target_den);
  j["abs_deviation"] = format_scientific(std::fabs(est.density - est.target), 6);
  return j;
}

json estimate_json(const EulerProductEstimate& e) {
  return json{{"prime_limit", e.prime_limit},
              {"largest_prime", e.largest_prime},
              {"prime_count", e.prime_count},
              {"value", format_decimal(e.value, kValuePlaces)},
              {"lower", format_decimal(e.lower, kValuePlaces)},
              {"upper", format_decimal(e.upper, kValuePlaces)},
              {"tail_bound", format_scientific(e.tail_bound, 6)}};
}

json run_euler(const RunConfig& cfg) {
  json j = header("euler");
  if (cfg.coprimality) {
    j["product"] = "coprimality";
    j["estimate"] = estimate_json(coprimality_product(cfg.prime_limit));
    j["reference"] = format_decimal(6.0L / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>),
                                    kValuePlaces);
  } else {
    j["product"] = "density";
    j["estimate"] = estimate_json(euler_product(cfg.prime_limit));
  }
  return j;
}

json run_mean(const RunConfig& cfg) {
  auto checkpoints = cfg.values;
  checkpoints.push_back(cfg.n);
  const auto tables = SieveTables::build(cfg.n);
  const auto series = mean_value_series(tables, checkpoints);
  json j = header("mean");
  j["n"] = cfg.n;
  json points = json::array();
  for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
    points.push_back(json{{"n", series.checkpoints[i]}, {"mean", format_decimal(series.partial_means[i], kValuePlaces)}});
  }
  j["checkpoints"] = points;
  j["final_mean"] = format_decimal(series.final_mean, kValuePlaces);
  return j;
}

json run_gl2(const RunConfig& cfg) {
  const auto n = static_cast<std::uint32_t>(cfg.n);
  const auto tables = SieveTables::build(n);
  const auto count = gl2::count_conjugacy_classes(n, tables, cfg.force);
  json j = header("gl2");
  j["n"] = cfg.n;
  j["group_order"] = count.group_order;
  j["phi"] = tables.phi(n);
  j["sigma"] = tables.sigma(n);
  j["class_count_brute"] = count.class_count_brute;
  j["class_count_formula"] = count.class_count_formula;
  j["match"] = count.matches();
  return j;
}

json summatory_json(const SummatoryResult& r) {
  return json{{"method", std::string(to_string(r.method))},
              {"x", r.x},
              {"phi_sum", r.phi_sum},
              {"main_term", format_decimal(r.main_term, 6)},
              {"abs_error", format_decimal(r.abs_error, 6)},
              {"normalized_error", format_scientific(r.normalized_error, 6)}};
}

json run_totient_sum(const RunConfig& cfg) {
  std::vector<SummatoryResult> results;
  if (cfg.method == "sieve" || cfg.method == "both") {
    results.push_back(phi_sum_sieve(cfg.x, SieveTables::build(cfg.x)));
  }
  if (cfg.method == "hyperbola" || cfg.method == "both") results.push_back(phi_sum_hyperbola(cfg.x));
  json j = header("totient-sum");
  j["x"] = cfg.x;
  json list = json::array();
  for (const auto& r : results) list.push_back(summatory_json(r));
  j["results"] = list;
  j["phi_sum"] = results.front().phi_sum;
  j["agree"] = std::all_of(results.begin(), results.end(),
                           [&](const auto& r) { return r.phi_sum == results.front().phi_sum; });
  return j;
}

json run_coprime(const RunConfig& cfg) {
  const std::uint64_t count = coprime_pair_count(cfg.n);
  json j = header("coprime");
  j["n"] = cfg.n;
  j["count"] = count;
  j["total"] = cfg.n * cfg.n;
  j["density"] = fraction_json(count, cfg.n * cfg.n);
  j["target"] = format_decimal(6.0L / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>),
                               kRatioPlaces);
  return j;
}

json run_witness(const RunConfig& cfg) {
  json list = json::array();
  bool all_ok = true;
  for (std::uint64_t c = 2; c <= cfg.c_max; ++c) {
    const Pair w = surjectivity_witness(c);
    const std::uint64_t value = f(w);
    all_ok = all_ok && value == c;
    if (c - 1 <= kMaxWitnessListing) list.push_back(json{{"c", c}, {"a", w.a}, {"b", w.b}, {"f", value}});
  }
  json j = header("witness");
  j["c_max"] = cfg.c_max;
  j["checked"] = cfg.c_max - 1;
  j["all_ok"] = all_ok;
  j["witnesses"] = list;
  return j;
}

json run_convergence(const RunConfig& cfg) {
  const auto top = *std::max_element(cfg.values.begin(), cfg.values.end());
  const auto tables = SieveTables::build(top);
  const auto rows = gl2::convergence_comparison(cfg.values, tables, cfg.threads);
  json list = json::array();
  for (const auto& r : rows) {
    list.push_back(json{{"n", r.n},
                        {"ones_count", r.ones_count},
                        {"rho_n", format_fraction(r.ones_count, r.n * r.n, kRatioPlaces)},
                        {"class_ratio", format_decimal(r.class_ratio, kRatioPlaces)},
                        {"running_mean", format_decimal(r.running_mean, kRatioPlaces)}});
  }
  json j = header("convergence");
  j["rows"] = list;
  return j;
}

json run_error_term(const RunConfig& cfg) {
  json list = json::array();
  for (const auto& r : error_term_report(cfg.values)) list.push_back(summatory_json(r));
  json j = header("error-term");
  j["results"] = list;
  return j;
}

std::string list_key_for(Subcommand s) {
  switch (s) {
    case Subcommand::density: return "histogram";
    case Subcommand::mean: return "checkpoints";
    case Subcommand::totient_sum:
    case Subcommand::error_term: return "results";
    case Subcommand::witness: return "witnesses";
    case Subcommand::convergence: return "rows";
    default: return "";
  }
}

json dispatch(const RunConfig& cfg) {
  switch (cfg.subcommand) {
    case Subcommand::density: return run_density(cfg);
    case Subcommand::heatmap: return run_heatmap(cfg);
    case Subcommand::local: return run_local(cfg);
    case Subcommand::euler: return run_euler(cfg);
    case Subcommand::mean: return run_mean(cfg);
    case Subcommand::gl2: return run_gl2(cfg);
    case Subcommand::totient_sum: return run_totient_sum(cfg);
    case Subcommand::coprime: return run_coprime(cfg);
    case Subcommand::witness: return run_witness(cfg);
    case Subcommand::convergence: return run_convergence(cfg);
    case Subcommand::error_term: return run_error_term(cfg);
  }
  throw std::logic_error("unhandled subcommand");
}

void emit(const RunConfig& cfg, const json& report, std::ostream& out) {
  std::string text;
  if (cfg.subcommand == Subcommand::heatmap || cfg.format == OutputFormat::json) {
    text = report.dump(2) + "\n";
  } else {
    text = to_csv(report, list_key_for(cfg.subcommand));
  }
  if (cfg.output_path && cfg.subcommand != Subcommand::heatmap) {
    std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + *cfg.output_path + "' for writing");
    file << text;
    file.flush();
    if (!file) throw IoError("failed writing '" + *cfg.output_path + "'");
  } else {
    out << text;
  }
}

// --- argument parsing ----------------------------------------------------

struct Parser {
  CLI::App app{"Exact and asymptotic statistics of f(a,b) = gcd(a+b, ab) / gcd(a,b)", "gcdint"};
  RunConfig cfg;
  std::string format_text;
  std::vector<std::pair<CLI::App*, Subcommand>> subs;

  CLI::App* add(const char* name, const char* help, Subcommand s) {
    CLI::App* sub = app.add_subcommand(name, help);
    subs.emplace_back(sub, s);
    return sub;
  }

  void add_output(CLI::App* sub, const char* formats) {
    sub->add_option("--format", format_text, std::string("Output format: ") + formats);
    sub->add_option("--out", cfg.output_path, "Write output to this file");
  }

  Parser() {
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    auto* density = add("density", "Exact count of f = 1 on the n x n grid", Subcommand::density);
    density->add_option("--n", cfg.n, "Grid size")->required();
    density->add_option("--histogram-cap", cfg.histogram_cap, "Largest f value with its own bucket");
    density->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    add_output(density, "json|csv");

    auto* hm = add("heatmap", "Heat map of f over [1,n]^2", Subcommand::heatmap);
    hm->add_option("--n", cfg.n, "Grid size")->required();
    hm->add_option("--out", cfg.output_path, "Image or CSV path")->required();
    hm->add_option("--format", format_text, "csv|ppm (default csv)");

    auto* local = add("local", "Density of the local event p | d and p | (a'+b')", Subcommand::local);
    local->add_option("--p", cfg.p, "Prime")->required();
    local->add_option("--n", cfg.n, "Grid size")->required();
    add_output(local, "json|csv");

    auto* euler = add("euler", "Truncated Euler product with rigorous enclosure", Subcommand::euler);
    euler->add_option("--prime-limit", cfg.prime_limit, "Include primes up to this bound");
    euler->add_flag("--coprimality", cfg.coprimality, "Evaluate prod (1 - 1/p^2) instead");
    add_output(euler, "json|csv");

    auto* mean = add("mean", "Running mean of phi(n) sigma(n) / n^2", Subcommand::mean);
    mean->add_option("--n", cfg.n, "Upper limit")->required();
    mean->add_option("--checkpoints", cfg.values, "Extra checkpoints")->delimiter(',');
    add_output(mean, "json|csv");

    auto* g = add("gl2", "Conjugacy classes of GL(2, Z/nZ) by orbit enumeration", Subcommand::gl2);
    g->add_option("--n", cfg.n, "Modulus")->required();
    g->add_flag("--force", cfg.force, "Allow moduli above the default cap");
    add_output(g, "json|csv");

    auto* ts = add("totient-sum", "Sum of phi(n) for n <= x", Subcommand::totient_sum);
    ts->add_option("--x", cfg.x, "Upper limit")->required();
    ts->add_option("--method", cfg.method, "sieve|hyperbola|both");
    add_output(ts, "json|csv");

    auto* cp = add("coprime", "Ordered coprime pairs in [1,n]^2", Subcommand::coprime);
    cp->add_option("--n", cfg.n, "Grid size")->required();
    add_output(cp, "json|csv");

    auto* w = add("witness", "Check f(c, c^2 - c) = c for 2 <= c <= c-max", Subcommand::witness);
    w->add_option("--c-max", cfg.c_max, "Largest c")->required();
    add_output(w, "json|csv");

    auto* cv = add("convergence", "rho_n beside phi(n) sigma(n) / n^2 and its running mean",
                   Subcommand::convergence);
    cv->add_option("--n", cfg.values, "Grid sizes")->required()->delimiter(',');
    cv->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    add_output(cv, "json|csv");

    auto* et = add("error-term", "Normalized error |Phi(x) - 3x^2/pi^2| / x^(3/2)", Subcommand::error_term);
    et->add_option("--x", cfg.values, "Arguments")->required()->delimiter(',');
    add_output(et, "json|csv");
  }

  void finish() {
    for (const auto& [sub, kind] : subs) {
      if (sub->parsed()) cfg.subcommand = kind;
    }
    if (format_text.empty()) {
      cfg.format = cfg.subcommand == Subcommand::heatmap ? OutputFormat::csv : OutputFormat::json;
    } else if (format_text == "json") {
      cfg.format = OutputFormat::json;
    } else if (format_text == "csv") {
      cfg.format = OutputFormat::csv;
    } else if (format_text == "ppm") {
      cfg.format = OutputFormat::ppm;
    } else {
      throw std::invalid_argument("unknown --format '" + format_text + "'");
    }
  }
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Parser parser;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    parser.app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << parser.app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << parser.app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    parser.finish();
    validate(parser.cfg);
    emit(parser.cfg, dispatch(parser.cfg), out);
    return kOk;
  } catch (const IoError& e) {
    err << "error: I/O: " << e.what() << "\n";
    return kIoError;
  } catch (const std::length_error& e) {
    err << "error: resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::overflow_error& e) {
    err << "error: out of range: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::bad_alloc&) {
    err << "error: resource limit: out of memory\n";
    return kResourceError;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid argument: " << e.what() << "\n";
    return kInvalidArgument;
  } catch (const std::domain_error& e) {
    err << "error: invalid argument: " << e.what() << "\n";
    return kInvalidArgument;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  }
}

}  // namespace gcdint::cli
