#pragma once

#include <vector>

#include "projconst/orthopoly.hpp"
#include "projconst/result.hpp"

namespace projconst {

inline constexpr double kDefaultTolerance = 1e-10;

/// Nodes and weights with
///   sum_i weights[i] f(nodes[i])  ~  int_lo^hi f(t) (1-t)^alpha (1+t)^beta dt.
/// The weight is always that of the global variable t on [-1, 1]; on a
/// subinterval touching an endpoint the singular factor stays inside a
/// Gauss-Jacobi rule, on interior subintervals it is folded into the weights.
struct QuadratureRule {
  double alpha = 0.0;
  double beta = 0.0;
  int order = 0;
  double lo = -1.0;
  double hi = 1.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_jacobi_rule(double alpha, double beta, int order, double lo = -1.0,
                                 double hi = 1.0);

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

/// int_{lo}^{hi} |P(t)| (1 - t^2)^gamma dt with abs_err <= tol.
///
/// The interval is split at the roots of P so that the integrand is smooth
/// on every piece; each piece integrates the signed polynomial and the
/// absolute values of the pieces are summed. The error estimate compares the
/// working order with a lower one and adds a rounding floor.
ComputationResult integrate_abs_jacobi(const JacobiParams& params, double gamma, double tol,
                                       Interval interval = {});

enum class DirichletKind {
  Full,  // sin((d + 1/2) t) / sin(t / 2)
  Half,  // sin((d + 1) t / 2) / sin(t / 2)
};

/// (1 / 2pi) int_0^{2pi} |kernel(t)| dt, integrated arch by arch between the
/// explicit zeros of the numerator.
ComputationResult dirichlet_lebesgue(int d, DirichletKind kind, double tol = kDefaultTolerance);

}  // namespace projconst
