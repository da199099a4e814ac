#pragma once

#include <span>
#include <vector>

namespace projconst {

/// Identifies P_degree^{(alpha, beta)}, normalized by P(1) = binom(degree + alpha, degree).
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;
  int degree = 0;
};

/// Throws DomainError unless alpha, beta > -1 and degree >= 0.
void validate(const JacobiParams& params);

/// Three-term recurrence for one Jacobi polynomial, with the coefficients
/// precomputed so that many points can be evaluated in a batch.
class JacobiRecurrence {
 public:
  explicit JacobiRecurrence(const JacobiParams& params);

  const JacobiParams& params() const { return params_; }

  double operator()(double t) const;

  /// Value and first derivative at t.
  std::pair<double, double> value_and_derivative(double t) const;

  /// out[i] = P(t[i]); uses the SIMD kernels. No domain check on t.
  void evaluate(std::span<const double> t, std::span<double> out) const;

 private:
  JacobiParams params_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> c_;
};

/// Maps t with |t| <= 1 + 1e-12 into [-1, 1]; throws DomainError beyond that.
double clamp_unit(double t, const char* op);

double jacobi_eval(const JacobiParams& params, double t);

/// P^{(a,b)}(t) - (-1)^d P^{(b,a)}(-t).
double jacobi_symmetry_check(const JacobiParams& params, double t);

/// C_d^{(lambda)}(t) via its Jacobi representation. lambda > -1/2, lambda != 0.
double gegenbauer_eval(double lambda, int d, double t);

/// Integral of C_d^{(lambda)}(t)^2 (1 - t^2)^{lambda - 1/2} over [-1, 1].
double gegenbauer_norm_sq(double lambda, int d);

/// Coefficients b_0..b_{floor(d/2)} of the Legendre harmonic
///   L_{n,d}(x) = sum_j b_j x_1^{d-2j} |(x_2, ..., x_n)|^{2j}.
struct CoeffList {
  int n = 2;
  int d = 0;
  std::vector<double> coeffs;
};

CoeffList legendre_nd_coeffs(int n, int d);

/// Cached coefficients; the reference stays valid for the life of the process.
const CoeffList& legendre_nd_coeffs_cached(int n, int d);

/// L°_{n,d}(t) = sum_j b_j t^{d-2j} (1 - t^2)^j.
double legendre_nd_eval(int n, int d, double t);

/// L_{n,d}(x) for x in R^n.
double legendre_harmonic_eval(int n, int d, std::span<const double> x);

/// All roots of P_degree^{(alpha,beta)} in increasing order, from the
/// eigenvalues of the Jacobi matrix followed by Newton polishing.
std::vector<double> jacobi_roots(const JacobiParams& params);

}  // namespace projconst
