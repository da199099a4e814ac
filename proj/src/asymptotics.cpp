#include "projconst/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "projconst/errors.hpp"
#include "projconst/gamma.hpp"
#include "projconst/projection.hpp"

namespace projconst {

const char* normalization_name(Normalization normalization) {
  switch (normalization) {
    case Normalization::DimSqrt:
      return "dim_sqrt";
    case Normalization::LogD:
      return "log_d";
    case Normalization::DPower:
      break;
  }
  return "d_power";
}

Normalization parse_normalization(std::string_view name) {
  if (name == "dim_sqrt") return Normalization::DimSqrt;
  if (name == "d_power") return Normalization::DPower;
  if (name == "log_d") return Normalization::LogD;
  throw DomainError("unknown normalization '" + std::string(name) + "'");
}

void validate(const LimitSpec& spec) {
  const std::string where = std::string(family_name(spec.family)) + " n=" +
                            std::to_string(spec.n) + " " + normalization_name(spec.normalization);
  switch (spec.normalization) {
    case Normalization::DPower:
      if (spec.n < 3) throw UnsupportedError("no d_power limit for n < 3: " + where);
      return;
    case Normalization::DimSqrt:
      if (spec.family != Family::Harmonic || spec.n < 3) {
        throw UnsupportedError("dim_sqrt limit exists only for harmonic with n >= 3: " + where);
      }
      return;
    case Normalization::LogD:
      if (spec.family == Family::Harmonic || spec.n != 2) {
        throw UnsupportedError("log_d limit exists only for homogeneous/polyleq with n = 2: " + where);
      }
      return;
  }
}

LimitSpec default_limit_spec(Family family, int n) {
  return {family, n, n == 2 ? Normalization::LogD : Normalization::DPower};
}

double limit_constant(const LimitSpec& spec) {
  validate(spec);
  const double n = spec.n;
  const double log_pi = std::log(std::numbers::pi);
  const double ln2 = std::numbers::ln2;
  if (spec.normalization == Normalization::LogD) {
    return 4.0 / (std::numbers::pi * std::numbers::pi);
  }
  switch (spec.family) {
    case Family::Harmonic: {
      // 2^{n-1/2} / sqrt((n-2)!) * Gamma(n/4)^2 / pi^2, or with d^{(n-2)/2}:
      // 2^n / (n-2)! * Gamma(n/4)^2 / pi^2
      const double log_gamma_sq = 2.0 * log_gamma(0.25 * n);
      const double log_fact = log_gamma(n - 1.0);
      if (spec.normalization == Normalization::DimSqrt) {
        return std::exp((n - 0.5) * ln2 - 0.5 * log_fact + log_gamma_sq - 2.0 * log_pi);
      }
      return std::exp(n * ln2 - log_fact + log_gamma_sq - 2.0 * log_pi);
    }
    case Family::Homogeneous:
      // 2^{n+1} / (pi^2 (n-2)) * Gamma(n/4 + 1/2)^2 / Gamma(n-1)
      return std::exp((n + 1.0) * ln2 - 2.0 * log_pi - std::log(n - 2.0) +
                      2.0 * log_gamma(0.25 * n + 0.5) - log_gamma(n - 1.0));
    case Family::PolyLeq:
      // Gamma(n/2 - 1) / (2^{n/2-3} pi Gamma(n/2 - 1/2)^2)
      return std::exp(log_gamma(0.5 * n - 1.0) - (0.5 * n - 3.0) * ln2 - log_pi -
                      2.0 * log_gamma(0.5 * n - 0.5));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double normalization_value(const LimitSpec& spec, int d) {
  switch (spec.normalization) {
    case Normalization::DimSqrt:
      return std::sqrt(static_cast<double>(dim_space({spec.family, spec.n, d})));
    case Normalization::LogD:
      return std::log(static_cast<double>(d));
    case Normalization::DPower:
      break;
  }
  return std::pow(static_cast<double>(d), 0.5 * (spec.n - 2));
}

ConvergenceReport convergence_report(const LimitSpec& spec, const std::vector<int>& d_values,
                                     double tol) {
  validate(spec);
  for (std::size_t i = 0; i < d_values.size(); ++i) {
    if (d_values[i] < 2) throw DomainError("convergence_report: degrees must be at least 2");
    if (i > 0 && d_values[i] <= d_values[i - 1]) {
      throw DomainError("convergence_report: degrees must be strictly increasing");
    }
  }
  ConvergenceReport report{spec, {}, false};
  const double limit = limit_constant(spec);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < d_values.size(); ++i) {
    const int d = d_values[i];
    const ComputationResult r = lambda({spec.family, spec.n, d}, tol);
    ConvergenceRow row;
    row.d = d;
    row.lambda = r.value;
    row.lambda_abs_err = r.abs_err;
    row.finite_ratio = r.value / normalization_value(spec, d);
    row.limit = limit;
    row.deviation = row.finite_ratio - limit;
    row.log_slope = nan;
    if (i > 0 && spec.normalization == Normalization::LogD) {
      const ConvergenceRow& prev = report.rows.back();
      row.log_slope = (row.lambda - prev.lambda) / std::log(static_cast<double>(d) / prev.d);
    }
    if (i > 0 && !(std::abs(row.deviation) < std::abs(report.rows.back().deviation))) {
      report.non_monotone = true;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace projconst
