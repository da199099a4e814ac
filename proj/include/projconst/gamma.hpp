#pragma once

#include <vector>

namespace projconst {

/// ln Gamma(x) for x > 0. Stirling series above x = 15, upward recurrence below.
double log_gamma(double x);

/// ln Gamma*(x), the Stirling remainder
///   ln Gamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2],
/// which is O(1/x) and carries no cancellation for large x.
double log_gamma_scaled(double x);

/// ln Gamma(p) - ln Gamma(q), stable when p and q are large and close.
double log_gamma_difference(double p, double q);

struct GammaRatioSpec {
  std::vector<double> numerator_args;
  std::vector<double> denominator_args;
};

/// ln of prod Gamma(num) / prod Gamma(den).
double log_gamma_ratio(const GammaRatioSpec& spec);

/// prod Gamma(num) / prod Gamma(den); throws OverflowError when the result
/// is not representable.
double gamma_ratio(const GammaRatioSpec& spec);

double beta(double a, double b);
double log_beta(double a, double b);

/// Relative residual of Gamma(x)Gamma(x+1/2) = 2^{1-2x} sqrt(pi) Gamma(2x).
double duplication_residual(double x);

}  // namespace projconst
