#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "projconst/asymptotics.hpp"
#include "projconst/errors.hpp"
#include "projconst/kernels.hpp"
#include "projconst/projection.hpp"
#include "projconst/record.hpp"
#include "projconst/verify.hpp"

using namespace projconst;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;

enum class Format { Json, Csv, Text };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Format> kFormats{
    {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

const std::vector<std::string> kFamilies{"harmonic",           "homogeneous",  "polyleq",
                                         "complex-homogeneous", "hilbert-real", "hilbert-complex"};

double default_tolerance() {
  const char* env = std::getenv("PROJCONST_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  double tol = 0.0;
  const std::string_view text(env);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), tol);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !(tol > 0.0)) {
    throw UsageError("PROJCONST_TOL must be a positive number, got '" + std::string(env) + "'");
  }
  return tol;
}

bool is_sphere_family(const std::string& family) {
  return family == "harmonic" || family == "homogeneous" || family == "polyleq";
}

OutputRecord compute_record(const std::string& family, int n, int d, double tol) {
  if (n < 1) throw UsageError("--n must be positive");
  if (d < 0) throw UsageError("--d must be non-negative");
  if (is_sphere_family(family)) {
    const SpaceId space{parse_family(family), n, d};
    if (n < 2) throw UsageError("--n must be at least 2 for " + family);
    const std::uint64_t dim = dim_space(space);
    return make_record(lambda(space, tol), dim);
  }
  if (family == "complex-homogeneous") {
    return make_record(lambda_complex_homogeneous(n, d),
                       binomial(static_cast<std::uint64_t>(n) + d - 1, static_cast<std::uint64_t>(d)));
  }
  const Field field = family == "hilbert-real" ? Field::Real : Field::Complex;
  return make_record(lambda_hilbert(n, field), static_cast<std::uint64_t>(n));
}

void print_header(Format format) {
  if (format == Format::Csv) std::cout << kCsvHeader << '\n';
}

void print_record(const OutputRecord& r, Format format) {
  switch (format) {
    case Format::Json:
      std::cout << to_json(r) << '\n';
      break;
    case Format::Csv:
      std::cout << to_csv_row(r) << '\n';
      break;
    case Format::Text:
      std::cout << to_text(r) << '\n';
      break;
  }
}

void print_failure_marker(const std::string& family, int n, int d, const std::string& what,
                          Format format) {
  switch (format) {
    case Format::Json:
      std::cout << "{\"failed\":{\"family\":" << nlohmann::json(family).dump() << ",\"n\":" << n
                << ",\"d\":" << d << ",\"error\":" << nlohmann::json(what).dump() << "}}\n";
      break;
    case Format::Csv:
      std::cout << family << ',' << n << ',' << d << ",,,,FAILED\n";
      break;
    case Format::Text:
      std::cout << "FAILED " << family << " n=" << n << " d=" << d << ": " << what << '\n';
      break;
  }
  std::cout.flush();
}

int cmd_compute(const std::string& family, int n, int d, double tol, Format format) {
  const OutputRecord r = compute_record(family, n, d, tol);
  print_header(format);
  print_record(r, format);
  return kExitOk;
}

int cmd_table(const std::string& family, int n, int d_min, int d_max, double tol, Format format,
              int jobs) {
  if (d_min < 0) throw UsageError("--d-min must be non-negative");
  if (d_min > d_max) throw UsageError("--d-min must not exceed --d-max");
  if (family.rfind("hilbert", 0) == 0) throw UsageError(family + " has no degree to tabulate");
  // Validates the combination before any work starts.
  compute_record(family, n, d_min, std::max(tol, 1.0));

  const int count = d_max - d_min + 1;
  using Row = std::variant<OutputRecord, std::string>;
  std::vector<std::optional<Row>> rows(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        rows[static_cast<std::size_t>(i)] = compute_record(family, n, d_min + i, tol);
      } catch (const std::exception& e) {
        rows[static_cast<std::size_t>(i)] = std::string(e.what());
      }
    }
  };
  const int threads = std::clamp(jobs, 1, count);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  print_header(format);
  for (int i = 0; i < count; ++i) {
    const Row& row = *rows[static_cast<std::size_t>(i)];
    if (const auto* err = std::get_if<std::string>(&row)) {
      std::cerr << "projconst: d=" << d_min + i << ": " << *err << '\n';
      print_failure_marker(family, n, d_min + i, *err, format);
      return kExitTolerance;
    }
    print_record(std::get<OutputRecord>(row), format);
  }
  return kExitOk;
}

LimitSpec limit_spec_from(const std::string& family, int n, const std::string& normalization) {
  if (!is_sphere_family(family)) throw UsageError("no limit constant for family " + family);
  try {
    LimitSpec spec = default_limit_spec(parse_family(family), n);
    if (!normalization.empty()) spec.normalization = parse_normalization(normalization);
    validate(spec);
    return spec;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

int cmd_limits(const std::string& family, int n, const std::string& normalization, Format format) {
  const LimitSpec spec = limit_spec_from(family, n, normalization);
  const double value = limit_constant(spec);
  const char* norm = normalization_name(spec.normalization);
  switch (format) {
    case Format::Json:
      std::cout << "{\"family\":\"" << family << "\",\"n\":" << n << ",\"normalization\":\"" << norm
                << "\",\"limit\":" << format_roundtrip(value) << "}\n";
      break;
    case Format::Csv:
      std::cout << "family,n,normalization,limit\n"
                << family << ',' << n << ',' << norm << ',' << format_roundtrip(value) << '\n';
      break;
    case Format::Text:
      std::cout << family << " n=" << n << " " << norm << " limit: " << format_15(value) << '\n';
      break;
  }
  return kExitOk;
}

std::vector<int> parse_d_values(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view field(text.data() + pos, comma - pos);
    int v = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size()) {
      throw UsageError("--d-values must be a comma-separated list of integers");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

int cmd_converge(const std::string& family, int n, const std::string& normalization,
                 const std::string& d_values, double tol, Format format) {
  const LimitSpec spec = limit_spec_from(family, n, normalization);
  const std::vector<int> ds = parse_d_values(d_values);
  ConvergenceReport report;
  try {
    report = convergence_report(spec, ds, tol);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto num = [&](double x) {
    if (std::isnan(x)) return std::string(format == Format::Json ? "null" : "");
    return format == Format::Text ? format_15(x) : format_roundtrip(x);
  };
  if (format == Format::Csv) std::cout << "d,lambda,abs_err,finite_ratio,limit,deviation,log_slope\n";
  for (const ConvergenceRow& r : report.rows) {
    switch (format) {
      case Format::Json:
        std::cout << "{\"d\":" << r.d << ",\"lambda\":" << num(r.lambda)
                  << ",\"abs_err\":" << num(r.lambda_abs_err) << ",\"finite_ratio\":" << num(r.finite_ratio)
                  << ",\"limit\":" << num(r.limit) << ",\"deviation\":" << num(r.deviation)
                  << ",\"log_slope\":" << num(r.log_slope) << "}\n";
        break;
      case Format::Csv:
        std::cout << r.d << ',' << num(r.lambda) << ',' << num(r.lambda_abs_err) << ','
                  << num(r.finite_ratio) << ',' << num(r.limit) << ',' << num(r.deviation) << ','
                  << num(r.log_slope) << '\n';
        break;
      case Format::Text:
        std::cout << "d=" << r.d << " ratio=" << num(r.finite_ratio) << " limit=" << num(r.limit)
                  << " deviation=" << num(r.deviation);
        if (!std::isnan(r.log_slope)) std::cout << " log_slope=" << num(r.log_slope);
        std::cout << '\n';
        break;
    }
  }
  if (report.non_monotone) std::cerr << "projconst: |deviation| is not strictly decreasing\n";
  return kExitOk;
}

int cmd_verify(bool quick, std::uint64_t seed, bool inject_fault) {
  const VerifyReport report = run_verification({quick, seed, inject_fault});
  std::cout << report.render();
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_kernel(const std::string& family, int n, int d, int samples, Format format) {
  if (!is_sphere_family(family)) throw UsageError("kernel needs harmonic, homogeneous or polyleq");
  if (samples < 2) throw UsageError("--samples must be at least 2");
  const SpaceId space{parse_family(family), n, d};
  try {
    validate(space);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const ClosedKernel closed(space);
  if (format == Format::Csv) std::cout << "t,k_sum,k_closed\n";
  for (int i = 0; i < samples; ++i) {
    const double t = i == samples - 1 ? 1.0 : -1.0 + 2.0 * i / (samples - 1);
    const double ks = kernel_axial_sum(space, t);
    const double kc = closed(t);
    switch (format) {
      case Format::Json:
        std::cout << "{\"t\":" << format_roundtrip(t) << ",\"k_sum\":" << format_roundtrip(ks)
                  << ",\"k_closed\":" << format_roundtrip(kc) << "}\n";
        break;
      case Format::Csv:
        std::cout << format_roundtrip(t) << ',' << format_roundtrip(ks) << ',' << format_roundtrip(kc)
                  << '\n';
        break;
      case Format::Text:
        std::cout << format_15(t) << ' ' << format_15(ks) << ' ' << format_15(kc) << '\n';
        break;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projection constants of spaces of spherical harmonics and polynomials on spheres"};
  app.require_subcommand(1);

  std::string family;
  int n = 0;
  int d = 0;
  int d_min = 0;
  int d_max = 0;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::optional<double> tol_flag;
  Format format = Format::Json;
  std::string normalization;
  std::string d_values;
  int samples = 0;
  bool quick = false;
  std::uint64_t seed = kDefaultSeed;
  bool inject_fault = false;

  const auto add_family = [&](CLI::App* cmd, const std::vector<std::string>& allowed) {
    cmd->add_option("--family", family, "Space family")->required()->check(CLI::IsMember(allowed));
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: json, csv or text")
        ->transform(CLI::CheckedTransformer(kFormats));
  };
  const std::vector<std::string> sphere_families(kFamilies.begin(), kFamilies.begin() + 3);

  auto* compute = app.add_subcommand("compute", "Projection constant of one space");
  add_family(compute, kFamilies);
  compute->add_option("--n", n, "Ambient dimension")->required();
  compute->add_option("--d", d, "Degree (ignored for the hilbert families)");
  compute->add_option("--tol", tol_flag, "Absolute tolerance")->check(CLI::PositiveNumber);
  add_format(compute);

  auto* table = app.add_subcommand("table", "Projection constants for a range of degrees");
  add_family(table, kFamilies);
  table->add_option("--n", n, "Ambient dimension")->required();
  table->add_option("--d-min", d_min, "First degree");
  table->add_option("--d-max", d_max, "Last degree")->required();
  table->add_option("--tol", tol_flag, "Absolute tolerance")->check(CLI::PositiveNumber);
  table->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(table);

  auto* limits = app.add_subcommand("limits", "Closed-form limit constant");
  add_family(limits, sphere_families);
  limits->add_option("--n", n, "Ambient dimension")->required();
  limits->add_option("--normalization", normalization, "dim_sqrt, d_power or log_d");
  add_format(limits);

  auto* converge = app.add_subcommand("converge", "Finite-degree ratios against the limit");
  add_family(converge, sphere_families);
  converge->add_option("--n", n, "Ambient dimension")->required();
  converge->add_option("--normalization", normalization, "dim_sqrt, d_power or log_d");
  converge->add_option("--d-values", d_values, "Comma-separated increasing degrees")->required();
  converge->add_option("--tol", tol_flag, "Absolute tolerance")->check(CLI::PositiveNumber);
  add_format(converge);

  auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
  verify->add_flag("--quick", quick, "Small instances only, no Monte Carlo");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_flag("--inject-fault", inject_fault)->group("");

  auto* kernel = app.add_subcommand("kernel", "Sample both kernel representations on [-1, 1]");
  add_family(kernel, sphere_families);
  kernel->add_option("--n", n, "Ambient dimension")->required();
  kernel->add_option("--d", d, "Degree")->required();
  kernel->add_option("--samples", samples, "Number of grid points")->required();
  add_format(kernel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const double tol = tol_flag ? *tol_flag : default_tolerance();
    if (*compute) return cmd_compute(family, n, d, tol, format);
    if (*table) return cmd_table(family, n, d_min, d_max, tol, format, jobs);
    if (*limits) return cmd_limits(family, n, normalization, format);
    if (*converge) return cmd_converge(family, n, normalization, d_values, tol, format);
    if (*verify) return cmd_verify(quick, seed, inject_fault);
    if (*kernel) return cmd_kernel(family, n, d, samples, format);
  } catch (const UsageError& e) {
    std::cerr << "projconst: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ToleranceError& e) {
    std::cerr << "projconst: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const DomainError& e) {
    std::cerr << "projconst: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "projconst: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    std::cerr << "projconst: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "projconst: " << e.what() << '\n';
    return kExitTolerance;
  }
  return kExitUsage;
}
