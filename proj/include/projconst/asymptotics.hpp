#pragma once

#include <string_view>
#include <vector>

#include "projconst/quadrature.hpp"
#include "projconst/sphere.hpp"

namespace projconst {

enum class Normalization {
  DimSqrt,  // lambda / sqrt(dim)
  DPower,   // lambda / d^{(n-2)/2}
  LogD,     // lambda / log d  (n = 2)
};

const char* normalization_name(Normalization normalization);
Normalization parse_normalization(std::string_view name);  // throws DomainError

struct LimitSpec {
  Family family = Family::Harmonic;
  int n = 3;
  Normalization normalization = Normalization::DPower;
};

/// Throws UnsupportedError for combinations without a known limit:
/// d_power needs n >= 3, dim_sqrt only for Harmonic with n >= 3, log_d only
/// for Homogeneous/PolyLeq with n = 2.
void validate(const LimitSpec& spec);

/// Default normalization for a family and n (d_power for n >= 3, log_d for n = 2).
LimitSpec default_limit_spec(Family family, int n);

double limit_constant(const LimitSpec& spec);

/// The normalizer at degree d: sqrt(dim), d^{(n-2)/2} or log d.
double normalization_value(const LimitSpec& spec, int d);

struct ConvergenceRow {
  int d = 0;
  double lambda = 0.0;
  double lambda_abs_err = 0.0;
  double finite_ratio = 0.0;
  double limit = 0.0;
  double deviation = 0.0;  // finite_ratio - limit
  /// For log_d: (lambda_i - lambda_{i-1}) / ln(d_i / d_{i-1}); NaN otherwise
  /// and on the first row.
  double log_slope = 0.0;
};

struct ConvergenceReport {
  LimitSpec spec;
  std::vector<ConvergenceRow> rows;
  /// True when |deviation| fails to decrease strictly along the rows.
  bool non_monotone = false;
};

ConvergenceReport convergence_report(const LimitSpec& spec, const std::vector<int>& d_values,
                                     double tol = kDefaultTolerance);

}  // namespace projconst
