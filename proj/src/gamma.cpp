#include "projconst/gamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "projconst/errors.hpp"
#include "projconst/summation.hpp"

namespace projconst {
namespace {

constexpr double kStirlingThreshold = 15.0;

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> kStirlingCoeffs = {
    1.0 / 12.0,          -1.0 / 360.0,   1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
};

// Asymptotic remainder for x >= kStirlingThreshold. The first omitted term is
// below 1e-21 at the threshold.
double stirling_remainder(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double acc = 0.0;
  for (auto it = kStirlingCoeffs.rbegin(); it != kStirlingCoeffs.rend(); ++it) {
    acc = acc * inv2 + *it;
  }
  return acc * inv;
}

// (x - 1/2) ln x - x + ln(2 pi)/2
double stirling_main(double x) {
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return (x - 0.5) * std::log(x) - x + half_log_two_pi;
}

// zeta(k) - 1 for k = 2..30.
constexpr std::array<double, 29> kZetaMinusOne = {
    6.44934066848226436472e-1, 2.020569031595942854e-1,   8.2323233711138191516e-2,
    3.69277551433699263314e-2, 1.73430619844491397145e-2, 8.3492773819228268398e-3,
    4.07735619794433937869e-3, 2.00839282608221441785e-3, 9.94575127818085337146e-4,
    4.94188604119464558702e-4, 2.46086553308048298638e-4, 1.22713347578489146752e-4,
    6.12481350587048292585e-5, 3.05882363070204935517e-5, 1.52822594086518717326e-5,
    7.6371976378997622736e-6,  3.81729326499983985646e-6, 1.90821271655393892566e-6,
    9.53962033872796113152e-7, 4.76932986787806463117e-7, 2.38450502727732990004e-7,
    1.19219925965311073068e-7, 5.96081890512594796124e-8, 2.98035035146522801861e-8,
    1.49015548283650412347e-8, 7.45071178983542949198e-9, 3.72533402478845705482e-9,
    1.8626597235130490064e-9,  9.31327432419668182872e-10,
};

// ln Gamma(2 + z) for |z| <= 1/2:
//   (1 - gamma) z + sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k.
// No cancellation near the zero at z = 0.
double log_gamma_two_plus(double z) {
  constexpr double one_minus_euler = 0.422784335098467139393;
  double acc = 0.0;
  for (int k = static_cast<int>(kZetaMinusOne.size()) + 1; k >= 2; --k) {
    const double term = kZetaMinusOne[static_cast<std::size_t>(k - 2)] / k;
    acc = acc * z + (k % 2 == 0 ? term : -term);
  }
  return z * (one_minus_euler + z * acc);
}

int shift_to_threshold(double x) {
  return x >= kStirlingThreshold ? 0 : static_cast<int>(std::ceil(kStirlingThreshold - x));
}

void require_positive(double x, const char* op) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(op) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x >= kStirlingThreshold) return stirling_main(x) + stirling_remainder(x);
  if (x <= 0.5) return log_gamma(x + 1.0) - std::log(x);
  if (x <= 1.5) return log_gamma_two_plus(x - 1.0) - std::log1p(x - 1.0);
  // Step down into (1.5, 2.5]; every added logarithm is positive.
  double prod = 1.0;
  while (x > 2.5) {
    x -= 1.0;
    prod *= x;
  }
  return log_gamma_two_plus(x - 2.0) + std::log(prod);
}

double log_gamma_scaled(double x) {
  require_positive(x, "log_gamma_scaled");
  const int k = shift_to_threshold(x);
  if (k == 0) return stirling_remainder(x);
  double prod = 1.0;
  for (int i = 0; i < k; ++i) prod *= x + i;
  const double y = x + k;
  // S(x) = M(y) - M(x) + S(y) - ln prod, with M(y) - M(x) formed stably.
  const double delta = y - x;
  const double main_diff = delta * (std::log(x) - 1.0) + (y - 0.5) * std::log1p(delta / x);
  return main_diff + stirling_remainder(y) - std::log(prod);
}

double log_gamma_difference(double p, double q) {
  require_positive(p, "log_gamma_difference");
  require_positive(q, "log_gamma_difference");
  if (p == q) return 0.0;
  const int k = shift_to_threshold(std::min(p, q));
  double correction = 0.0;
  if (k > 0) {
    double ratio = 1.0;
    for (int i = 0; i < k; ++i) ratio *= (p + i) / (q + i);
    correction = std::log(ratio);
  }
  const double ps = p + k;
  const double qs = q + k;
  const double delta = ps - qs;
  const double main_diff = delta * (std::log(qs) - 1.0) + (ps - 0.5) * std::log1p(delta / qs);
  return main_diff + (stirling_remainder(ps) - stirling_remainder(qs)) - correction;
}

double log_gamma_ratio(const GammaRatioSpec& spec) {
  std::vector<double> num = spec.numerator_args;
  std::vector<double> den = spec.denominator_args;
  for (double a : num) require_positive(a, "gamma_ratio");
  for (double a : den) require_positive(a, "gamma_ratio");
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());

  CompensatedSum sum;
  const std::size_t paired = std::min(num.size(), den.size());
  for (std::size_t i = 0; i < paired; ++i) sum.add(log_gamma_difference(num[i], den[i]));
  for (std::size_t i = paired; i < num.size(); ++i) sum.add(log_gamma(num[i]));
  for (std::size_t i = paired; i < den.size(); ++i) sum.add(-log_gamma(den[i]));
  return sum.value();
}

double gamma_ratio(const GammaRatioSpec& spec) {
  const double log_value = log_gamma_ratio(spec);
  const double value = std::exp(log_value);
  if (!std::isfinite(value) || (value == 0.0 && std::isfinite(log_value))) {
    const double exponent_bits = std::abs(log_value) / std::numbers::ln2;
    throw OverflowError("gamma_ratio: result exp(" + std::to_string(log_value) +
                            ") is outside the double range",
                        static_cast<int>(std::ceil(std::log2(exponent_bits))) + 1);
  }
  return value;
}

double log_beta(double a, double b) {
  require_positive(a, "beta");
  require_positive(b, "beta");
  const auto [lo, hi] = std::minmax(a, b);
  return log_gamma_ratio({{lo, hi}, {lo + hi}});
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

double duplication_residual(double x) {
  require_positive(x, "duplication_residual");
  // Gamma(x)Gamma(x+1/2) / (2^{1-2x} sqrt(pi) Gamma(2x))
  //   = (1 + 1/(2x))^x e^{-1/2} Gamma*(x) Gamma*(x+1/2) / Gamma*(2x)
  const double log_ratio = x * std::log1p(0.5 / x) - 0.5 + log_gamma_scaled(x) +
                           log_gamma_scaled(x + 0.5) - log_gamma_scaled(2.0 * x);
  return std::abs(std::expm1(log_ratio));
}

}  // namespace projconst
