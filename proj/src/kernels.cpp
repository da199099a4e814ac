#include "projconst/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "projconst/errors.hpp"
#include "projconst/gamma.hpp"
#include "projconst/quadrature.hpp"
#include "projconst/summation.hpp"

namespace projconst {

double kernel_axial_sum(const SpaceId& space, double t) {
  validate(space);
  t = clamp_unit(t, "kernel_axial_sum");
  const int n = space.n;
  const int d = space.d;
  CompensatedSum sum;
  auto add_component = [&](int k) {
    sum.add(static_cast<double>(harmonic_dim(n, k)) * legendre_nd_eval(n, k, t));
  };
  switch (space.family) {
    case Family::Harmonic:
      add_component(d);
      break;
    case Family::Homogeneous:
      for (int k = d; k >= 0; k -= 2) add_component(k);
      break;
    case Family::PolyLeq:
      for (int k = 0; k <= d; ++k) add_component(k);
      break;
  }
  return sum.value();
}

ClosedKernel::ClosedKernel(const SpaceId& space) : space_(space) {
  validate(space);
  if (space.n == 2) return;
  const double n = space.n;
  const double d = space.d;
  double log_scale = 0.0;
  switch (space.family) {
    case Family::Harmonic:
      // N_{n,d} d! Gamma((n-1)/2) / Gamma(d + (n-1)/2)
      jacobi_ = JacobiParams{0.5 * (n - 3), 0.5 * (n - 3), space.d};
      log_scale = std::log(static_cast<double>(harmonic_dim(space.n, space.d))) +
                  log_gamma_ratio({{d + 1.0, 0.5 * (n - 1)}, {d + 0.5 * (n - 1)}});
      break;
    case Family::Homogeneous:
      // (1/2) Gamma((n-1)/2)/Gamma(n-1) * Gamma(d+n)/Gamma(d+(n+1)/2)
      jacobi_ = JacobiParams{0.5 * (n - 1), 0.5 * (n - 1), space.d};
      log_scale = -std::numbers::ln2 +
                  log_gamma_ratio({{0.5 * (n - 1), d + n}, {n - 1.0, d + 0.5 * (n + 1)}});
      break;
    case Family::PolyLeq:
      // Gamma((n-1)/2)/Gamma(n-1) * Gamma(d+n-1)/Gamma(d+(n-1)/2)
      jacobi_ = JacobiParams{0.5 * (n - 1), 0.5 * (n - 3), space.d};
      log_scale = log_gamma_ratio({{0.5 * (n - 1), d + n - 1.0}, {n - 1.0, d + 0.5 * (n - 1)}});
      break;
  }
  prefactor_ = std::exp(log_scale);
  recurrence_.emplace(*jacobi_);
}

double ClosedKernel::trigonometric(double t) const {
  const int d = space_.d;
  const double theta = std::acos(t);
  switch (space_.family) {
    case Family::Harmonic:
      return d == 0 ? 1.0 : 2.0 * std::cos(d * theta);
    case Family::Homogeneous: {
      // sin((d+1) theta) / sin(theta)
      if (t == 1.0) return d + 1.0;
      if (t == -1.0) return (d % 2 == 0 ? 1.0 : -1.0) * (d + 1.0);
      return std::sin((d + 1.0) * theta) / std::sin(theta);
    }
    case Family::PolyLeq: {
      // sin((d+1/2) theta) / sin(theta/2)
      if (t == 1.0) return 2.0 * d + 1.0;
      return std::sin((d + 0.5) * theta) / std::sin(0.5 * theta);
    }
  }
  return 0.0;
}

double ClosedKernel::operator()(double t) const {
  t = clamp_unit(t, "kernel_axial_closed");
  if (!recurrence_) return trigonometric(t);
  return prefactor_ * (*recurrence_)(t);
}

void ClosedKernel::evaluate(std::span<const double> t, std::span<double> out) const {
  if (!recurrence_) {
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = trigonometric(clamp_unit(t[i], "kernel"));
    return;
  }
  recurrence_->evaluate(t, out);
  for (double& v : out) v *= prefactor_;
}

double kernel_axial_closed(const SpaceId& space, double t) { return ClosedKernel(space)(t); }

double kernel_eval(const KernelForm& form, double t) {
  return form.representation == KernelRepresentation::SumOfLegendre
             ? kernel_axial_sum(form.space, t)
             : kernel_axial_closed(form.space, t);
}

namespace {

// c_n int k^2 w dt with an order-m Gauss-Jacobi rule; exact once m > d.
std::pair<double, double> kernel_square_integral(const ClosedKernel& kernel, int order) {
  const double gamma = 0.5 * (kernel.space().n - 3);
  const QuadratureRule rule = gauss_jacobi_rule(gamma, gamma, order);
  std::vector<double> values(rule.nodes.size());
  kernel.evaluate(rule.nodes, values);
  CompensatedSum sum;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double term = rule.weights[i] * values[i] * values[i];
    sum.add(term);
    magnitude += std::abs(term);
  }
  const double c = axial_constant(kernel.space().n);
  return {c * sum.value(), c * magnitude};
}

}  // namespace

ComputationResult kernel_l2_norm(const SpaceId& space, double tol) {
  validate(space);
  const ClosedKernel kernel(space);
  const int order = space.d + 1;
  const auto [fine, magnitude] = kernel_square_integral(kernel, order + 1);
  const auto coarse = kernel_square_integral(kernel, order).first;
  const double eps = std::numeric_limits<double>::epsilon();
  const double sq_err = std::abs(fine - coarse) + 8.0 * eps * (space.d + order) * magnitude;
  ComputationResult result{to_string(space), space.n, space.d, std::sqrt(fine), 0.0,
                           Method::JacobiQuadrature};
  result.abs_err = sq_err / (2.0 * result.value);
  const double allowed = std::max(tol, 1e-8);
  if (result.abs_err > allowed * result.value) {
    throw ToleranceError("kernel_l2_norm: relative error " +
                             std::to_string(result.abs_err / result.value) + " exceeds " +
                             std::to_string(allowed),
                         result.abs_err, allowed * result.value);
  }
  return result;
}

}  // namespace projconst
