#include "projconst/projection.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "projconst/errors.hpp"
#include "projconst/gamma.hpp"
#include "projconst/kernels.hpp"
#include "projconst/orthopoly.hpp"
#include "projconst/summation.hpp"

namespace projconst {

namespace debug {
namespace {
std::atomic<double> g_prefactor_scale{1.0};
}
void set_prefactor_scale(double scale) { g_prefactor_scale.store(scale); }
double prefactor_scale() { return g_prefactor_scale.load(); }
}  // namespace debug

namespace {

constexpr double kPrefactorRelErr = 1e-13;

void require_space_args(int n, int d, const char* op) {
  if (n < 2) throw DomainError(std::string(op) + ": n must be at least 2");
  if (d < 0) throw DomainError(std::string(op) + ": d must be non-negative");
}

ComputationResult constants_space(Family family, int n) {
  return {family_name(family), n, 0, 1.0, 0.0, Method::ClosedForm};
}

ComputationResult jacobi_route(Family family, int n, int d, double log_prefactor,
                               const JacobiParams& params, double tol) {
  const double gamma = 0.5 * (n - 3);
  const ComputationResult integral = integrate_abs_jacobi(params, gamma, tol);
  const double prefactor = std::exp(log_prefactor) * debug::prefactor_scale();
  ComputationResult out{family_name(family), n, d, prefactor * integral.value, 0.0,
                        Method::JacobiQuadrature};
  out.abs_err = prefactor * integral.abs_err + kPrefactorRelErr * out.value;
  return out;
}

ComputationResult from_dirichlet(Family family, int d, DirichletKind kind, double tol) {
  ComputationResult r = dirichlet_lebesgue(d, kind, tol);
  r.subject = family_name(family);
  r.n = 2;
  return r;
}

}  // namespace

ComputationResult lambda_harmonic(int n, int d, double tol) {
  require_space_args(n, d, "lambda_harmonic");
  if (d == 0) return constants_space(Family::Harmonic, n);
  if (n == 2) {
    return {family_name(Family::Harmonic), 2, d, 4.0 / std::numbers::pi, 0.0, Method::ClosedForm};
  }
  // (2d+n-2)/2^{n-2} * Gamma(d+n-2) / (Gamma((n-1)/2) Gamma(d+(n-1)/2))
  const double log_pre = std::log(2.0 * d + n - 2.0) - (n - 2) * std::numbers::ln2 +
                         log_gamma_ratio({{d + n - 2.0}, {0.5 * (n - 1), d + 0.5 * (n - 1)}});
  const double alpha = 0.5 * (n - 3);
  return jacobi_route(Family::Harmonic, n, d, log_pre, {alpha, alpha, d}, tol);
}

ComputationResult lambda_homogeneous(int n, int d, double tol) {
  require_space_args(n, d, "lambda_homogeneous");
  if (d == 0) return constants_space(Family::Homogeneous, n);
  if (n == 2) return from_dirichlet(Family::Homogeneous, d, DirichletKind::Half, tol);
  // 1/(2 sqrt(pi)) * Gamma(n/2) Gamma(d+n) / (Gamma(n-1) Gamma(d+(n+1)/2))
  const double log_pre = -std::numbers::ln2 - 0.5 * std::log(std::numbers::pi) +
                         log_gamma_ratio({{0.5 * n, d + 1.0 * n}, {n - 1.0, d + 0.5 * (n + 1)}});
  const double alpha = 0.5 * (n - 1);
  return jacobi_route(Family::Homogeneous, n, d, log_pre, {alpha, alpha, d}, tol);
}

ComputationResult lambda_poly_leq(int n, int d, double tol) {
  require_space_args(n, d, "lambda_poly_leq");
  if (d == 0) return constants_space(Family::PolyLeq, n);
  if (n == 2) return from_dirichlet(Family::PolyLeq, d, DirichletKind::Full, tol);
  // Gamma(n/2)/(sqrt(pi) Gamma(n-1)) * Gamma(d+n-1)/Gamma(d+(n-1)/2)
  const double log_pre = -0.5 * std::log(std::numbers::pi) +
                         log_gamma_ratio({{0.5 * n, d + n - 1.0}, {n - 1.0, d + 0.5 * (n - 1)}});
  return jacobi_route(Family::PolyLeq, n, d, log_pre, {0.5 * (n - 1), 0.5 * (n - 3), d}, tol);
}

ComputationResult lambda(const SpaceId& space, double tol) {
  switch (space.family) {
    case Family::Homogeneous:
      return lambda_homogeneous(space.n, space.d, tol);
    case Family::PolyLeq:
      return lambda_poly_leq(space.n, space.d, tol);
    case Family::Harmonic:
      break;
  }
  return lambda_harmonic(space.n, space.d, tol);
}

ComputationResult lambda_poly_leq_sphere2(int d, double tol) {
  if (d < 0) throw DomainError("lambda_poly_leq_sphere2: d must be non-negative");
  const ComputationResult integral = integrate_abs_jacobi({1.0, 0.0, d}, 0.0, tol);
  const double scale = 0.5 * (d + 1);
  return {"polyleq-gronwall", 3, d, scale * integral.value, scale * integral.abs_err,
          Method::JacobiQuadrature};
}

namespace {

// Zeros of the closed kernel as angles in (0, pi), increasing.
std::vector<double> kernel_zero_angles(const ClosedKernel& kernel) {
  const SpaceId& s = kernel.space();
  std::vector<double> angles;
  if (s.d == 0) return angles;
  if (kernel.jacobi()) {
    const std::vector<double> roots = jacobi_roots(*kernel.jacobi());
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) angles.push_back(std::acos(*it));
    return angles;
  }
  const double pi = std::numbers::pi;
  switch (s.family) {
    case Family::Harmonic:  // cos(d theta)
      for (int k = 0; k < s.d; ++k) angles.push_back((k + 0.5) * pi / s.d);
      break;
    case Family::Homogeneous:  // sin((d+1) theta)
      for (int k = 1; k <= s.d; ++k) angles.push_back(k * pi / (s.d + 1));
      break;
    case Family::PolyLeq:  // sin((d+1/2) theta)
      for (int k = 1; 2 * k < 2 * s.d + 1; ++k) angles.push_back(2.0 * k * pi / (2 * s.d + 1));
      break;
  }
  return angles;
}

struct AngleSum {
  double value;
  double magnitude;
};

AngleSum angle_integral(const ClosedKernel& kernel, const std::vector<double>& breaks, int order) {
  const QuadratureRule base = gauss_jacobi_rule(0.0, 0.0, order);
  const int sin_power = kernel.space().n - 2;
  std::vector<double> nodes;
  std::vector<double> weights;
  nodes.reserve((breaks.size() - 1) * order);
  weights.reserve(nodes.capacity());
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    const double half = 0.5 * (breaks[j + 1] - breaks[j]);
    for (int i = 0; i < order; ++i) {
      const double theta = breaks[j] + half * (1.0 + base.nodes[i]);
      nodes.push_back(std::cos(theta));
      weights.push_back(base.weights[i] * half * std::pow(std::sin(theta), sin_power));
    }
  }
  std::vector<double> values(nodes.size());
  kernel.evaluate(nodes, values);
  CompensatedSum total;
  double magnitude = 0.0;
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    CompensatedSum piece;
    for (int i = 0; i < order; ++i) {
      const std::size_t idx = j * order + i;
      const double term = weights[idx] * values[idx];
      piece.add(term);
      magnitude += std::abs(term);
    }
    total.add(std::abs(piece.value()));
  }
  return {total.value(), magnitude};
}

}  // namespace

ComputationResult lambda_via_kernel(const SpaceId& space, double tol) {
  validate(space);
  const ClosedKernel kernel(space);
  std::vector<double> breaks{0.0};
  for (double a : kernel_zero_angles(kernel)) breaks.push_back(a);
  breaks.push_back(std::numbers::pi);

  // dsigma on the axis: c_n (1-t^2)^{(n-3)/2} dt = c_n sin^{n-2}(theta) dtheta
  const double c = axial_constant(space.n);
  int order = std::min(space.d + space.n + 4, 32);
  const double eps = std::numeric_limits<double>::epsilon();
  double estimate = 0.0;
  while (order <= 512) {
    const AngleSum fine = angle_integral(kernel, breaks, order);
    const AngleSum coarse = angle_integral(kernel, breaks, (2 * order + 2) / 3);
    estimate = c * (std::abs(fine.value - coarse.value) + 4.0 * eps * (space.d + order) * fine.magnitude);
    if (estimate <= tol * std::max(1.0, c * fine.value)) {
      return {family_name(space.family), space.n, space.d, c * fine.value, estimate,
              Method::JacobiQuadrature};
    }
    order *= 2;
  }
  throw ToleranceError("lambda_via_kernel: tolerance not met", estimate, tol);
}

ComputationResult lambda_complex_homogeneous(int n, int d) {
  if (n < 1) throw DomainError("lambda_complex_homogeneous: n must be at least 1");
  if (d < 0) throw DomainError("lambda_complex_homogeneous: d must be non-negative");
  // Gamma(n+d)/Gamma(1+d) and Gamma(1+d/2)/Gamma(n+d/2) telescope into
  // n-1 factors 2(d+k)/(d+2k).
  double value = 1.0;
  for (int k = 1; k < n; ++k) value *= 2.0 * (d + k) / (d + 2.0 * k);
  const double err = 2.0 * n * std::numeric_limits<double>::epsilon() * value;
  return {"complex-homogeneous", n, d, value, err, Method::ClosedForm};
}

ComputationResult lambda_hilbert(int n, Field field) {
  if (n < 1) throw DomainError("lambda_hilbert: n must be at least 1");
  double value;
  if (field == Field::Real) {
    value = 2.0 / std::sqrt(std::numbers::pi) * gamma_ratio({{0.5 * (n + 2)}, {0.5 * (n + 1)}});
  } else {
    value = 0.5 * std::sqrt(std::numbers::pi) * gamma_ratio({{n + 1.0}, {n + 0.5}});
  }
  const double err = 16.0 * std::numeric_limits<double>::epsilon() * value;
  return {field == Field::Real ? "hilbert-real" : "hilbert-complex", n, 1, value, err,
          Method::ClosedForm};
}

}  // namespace projconst
