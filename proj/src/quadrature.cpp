#include "projconst/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "projconst/errors.hpp"
#include "projconst/gamma.hpp"
#include "projconst/summation.hpp"

namespace projconst {
namespace {

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxOrder = 512;

struct BaseRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

BaseRule compute_base_rule(double alpha, double beta, int order) {
  const JacobiParams params{alpha, beta, order};
  BaseRule rule;
  rule.nodes = jacobi_roots(params);
  rule.weights.resize(order);
  const double log_c = (alpha + beta + 1.0) * std::numbers::ln2 +
                       log_gamma_ratio({{order + alpha + 1.0, order + beta + 1.0},
                                        {order + alpha + beta + 1.0, order + 1.0}});
  const JacobiRecurrence poly(params);
  for (int i = 0; i < order; ++i) {
    const double x = rule.nodes[i];
    const double dp = poly.value_and_derivative(x).second;
    const double one_minus_sq = (1.0 - x) * (1.0 + x);
    rule.weights[i] = std::exp(log_c - std::log(one_minus_sq) - 2.0 * std::log(std::abs(dp)));
  }
  return rule;
}

// Rules on [-1, 1] are immutable once built; the cache hands out shared
// ownership so readers never race with insertion.
std::shared_ptr<const BaseRule> base_rule(double alpha, double beta, int order) {
  static std::shared_mutex mutex;
  static std::map<std::tuple<double, double, int>, std::shared_ptr<const BaseRule>> cache;
  const auto key = std::make_tuple(alpha, beta, order);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto fresh = std::make_shared<const BaseRule>(compute_base_rule(alpha, beta, order));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(fresh)).first->second;
}

void require_weight_exponents(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("quadrature weight exponents must exceed -1");
  }
}

}  // namespace

QuadratureRule gauss_jacobi_rule(double alpha, double beta, int order, double lo, double hi) {
  require_weight_exponents(alpha, beta);
  if (order < 1) throw DomainError("gauss_jacobi_rule: order must be at least 1");
  if (!(lo >= -1.0 && lo < hi && hi <= 1.0)) {
    throw DomainError("gauss_jacobi_rule: interval must satisfy -1 <= lo < hi <= 1");
  }

  QuadratureRule rule{alpha, beta, order, lo, hi, std::vector<double>(order),
                      std::vector<double>(order)};
  const bool left_end = (lo == -1.0);
  const bool right_end = (hi == 1.0);
  const double half = 0.5 * (hi - lo);

  if (left_end && right_end) {
    const auto base = base_rule(alpha, beta, order);
    rule.nodes = base->nodes;
    rule.weights = base->weights;
    return rule;
  }

  if (left_end) {
    // (1+t)^beta = (half (1+u))^beta stays in the rule; (1-t)^alpha is smooth here.
    const auto base = base_rule(0.0, beta, order);
    const double scale = std::pow(half, beta + 1.0);
    for (int i = 0; i < order; ++i) {
      const double u = base->nodes[i];
      const double t = lo + half * (1.0 + u);
      const double one_minus_t = (1.0 - hi) + half * (1.0 - u);
      rule.nodes[i] = t;
      rule.weights[i] = base->weights[i] * scale * std::pow(one_minus_t, alpha);
    }
    return rule;
  }

  if (right_end) {
    const auto base = base_rule(alpha, 0.0, order);
    const double scale = std::pow(half, alpha + 1.0);
    for (int i = 0; i < order; ++i) {
      const double u = base->nodes[i];
      const double t = hi - half * (1.0 - u);
      const double one_plus_t = (1.0 + lo) + half * (1.0 + u);
      rule.nodes[i] = t;
      rule.weights[i] = base->weights[i] * scale * std::pow(one_plus_t, beta);
    }
    return rule;
  }

  const auto base = base_rule(0.0, 0.0, order);
  for (int i = 0; i < order; ++i) {
    const double u = base->nodes[i];
    const double t = lo + half * (1.0 + u);
    const double one_minus_t = (1.0 - hi) + half * (1.0 - u);
    const double one_plus_t = (1.0 + lo) + half * (1.0 + u);
    rule.nodes[i] = t;
    rule.weights[i] =
        base->weights[i] * half * std::pow(one_minus_t, alpha) * std::pow(one_plus_t, beta);
  }
  return rule;
}

namespace {

struct PiecewiseSum {
  double value = 0.0;
  double magnitude = 0.0;  // sum of |piece| before the final absolute value
};

PiecewiseSum abs_piecewise(const JacobiRecurrence& poly, double gamma,
                           const std::vector<double>& breaks, int order) {
  const std::size_t pieces = breaks.size() - 1;
  std::vector<QuadratureRule> rules;
  rules.reserve(pieces);
  std::vector<double> nodes;
  nodes.reserve(pieces * order);
  for (std::size_t j = 0; j < pieces; ++j) {
    rules.push_back(gauss_jacobi_rule(gamma, gamma, order, breaks[j], breaks[j + 1]));
    nodes.insert(nodes.end(), rules.back().nodes.begin(), rules.back().nodes.end());
  }
  std::vector<double> values(nodes.size());
  poly.evaluate(nodes, values);

  CompensatedSum total;
  double magnitude = 0.0;
  std::size_t offset = 0;
  for (const QuadratureRule& rule : rules) {
    CompensatedSum piece;
    for (int i = 0; i < order; ++i) {
      const double term = rule.weights[i] * values[offset + i];
      piece.add(term);
      magnitude += std::abs(term);
    }
    offset += order;
    total.add(std::abs(piece.value()));
  }
  return {total.value(), magnitude};
}

}  // namespace

ComputationResult integrate_abs_jacobi(const JacobiParams& params, double gamma, double tol,
                                       Interval interval) {
  validate(params);
  if (!(gamma > -1.0)) throw DomainError("integrate_abs_jacobi: gamma must exceed -1");
  if (!(tol > 0.0)) throw DomainError("integrate_abs_jacobi: tol must be positive");
  if (!(interval.lo >= -1.0 && interval.lo < interval.hi && interval.hi <= 1.0)) {
    throw DomainError("integrate_abs_jacobi: interval must lie in [-1, 1]");
  }

  const int d = params.degree;
  ComputationResult result{"int|P|w", 0, d, 0.0, 0.0, Method::JacobiQuadrature};

  std::vector<double> breaks{interval.lo};
  if (d >= 1) {
    for (double r : jacobi_roots(params)) {
      if (r > interval.lo && r < interval.hi) breaks.push_back(r);
    }
  }
  breaks.push_back(interval.hi);

  const JacobiRecurrence poly(params);
  const int margin = static_cast<int>(std::ceil(std::max(gamma, 0.0))) + 4;
  int order = std::min((d + 2) / 2 + margin, 32);
  double estimate = 0.0;
  while (true) {
    const int lower = std::max(1, (2 * order + 2) / 3);
    const PiecewiseSum fine = abs_piecewise(poly, gamma, breaks, order);
    const PiecewiseSum coarse = abs_piecewise(poly, gamma, breaks, lower);
    const double floor = 4.0 * kEps * (d + order) * fine.magnitude;
    estimate = std::abs(fine.value - coarse.value) + floor;
    if (estimate <= tol) {
      result.value = fine.value;
      result.abs_err = estimate;
      return result;
    }
    if (order * 2 > kMaxOrder) break;
    order *= 2;
  }
  throw ToleranceError("integrate_abs_jacobi: achieved error " + short_number(estimate) +
                           " exceeds tolerance " + short_number(tol),
                       estimate, tol);
}

namespace {

struct Arch {
  double start;   // zero of the numerator where the arch begins
  double length;  // arch length (the last arch may be cut at pi)
};

PiecewiseSum dirichlet_arches(double freq, const std::vector<Arch>& arches, int order) {
  const auto base = base_rule(0.0, 0.0, order);
  CompensatedSum total;
  double magnitude = 0.0;
  for (const Arch& arch : arches) {
    const double half = 0.5 * arch.length;
    CompensatedSum piece;
    for (int i = 0; i < order; ++i) {
      // On the arch, |sin(freq t)| = sin(freq s) with s = t - start, since
      // freq * start is a multiple of pi.
      const double s = half * (1.0 + base->nodes[i]);
      const double t = arch.start + s;
      const double term = base->weights[i] * half * std::sin(freq * s) / std::sin(0.5 * t);
      piece.add(term);
      magnitude += std::abs(term);
    }
    total.add(piece.value());
  }
  return {total.value(), magnitude};
}

}  // namespace

ComputationResult dirichlet_lebesgue(int d, DirichletKind kind, double tol) {
  if (d < 0) throw DomainError("dirichlet_lebesgue: d must be non-negative");
  if (!(tol > 0.0)) throw DomainError("dirichlet_lebesgue: tol must be positive");
  ComputationResult result{kind == DirichletKind::Full ? "dirichlet-full" : "dirichlet-half", 2,
                           d, 0.0, 0.0, Method::DirichletQuadrature};
  if (d == 0) {
    result.value = 1.0;
    return result;
  }

  // The integrand is symmetric about pi; integrate over [0, pi] and double.
  const double freq = (kind == DirichletKind::Full) ? d + 0.5 : 0.5 * (d + 1);
  const double spacing = std::numbers::pi / freq;
  std::vector<Arch> arches;
  for (long k = 0;; ++k) {
    const double start = k * spacing;
    if (start >= std::numbers::pi) break;
    const double end = std::min((k + 1) * spacing, std::numbers::pi);
    arches.push_back({start, end - start});
  }

  int order = 16;
  double estimate = 0.0;
  while (true) {
    const int lower = (2 * order + 2) / 3;
    const PiecewiseSum fine = dirichlet_arches(freq, arches, order);
    const PiecewiseSum coarse = dirichlet_arches(freq, arches, lower);
    const double floor = 4.0 * kEps * order * fine.magnitude;
    estimate = (std::abs(fine.value - coarse.value) + floor) / std::numbers::pi;
    if (estimate <= tol) {
      result.value = fine.value / std::numbers::pi;
      result.abs_err = estimate;
      return result;
    }
    if (order * 2 > kMaxOrder) break;
    order *= 2;
  }
  throw ToleranceError("dirichlet_lebesgue: achieved error " + short_number(estimate) +
                           " exceeds tolerance " + short_number(tol),
                       estimate, tol);
}

}  // namespace projconst
