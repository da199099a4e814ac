#pragma once

#include "projconst/quadrature.hpp"
#include "projconst/result.hpp"
#include "projconst/sphere.hpp"

namespace projconst {

/// lambda(H_d(S^{n-1})). n = 2 is exactly 4/pi for d >= 1.
ComputationResult lambda_harmonic(int n, int d, double tol = kDefaultTolerance);

/// lambda(P_d(S^{n-1})). n = 2 uses the half-frequency Dirichlet integral.
ComputationResult lambda_homogeneous(int n, int d, double tol = kDefaultTolerance);

/// lambda(P_{<=d}(S^{n-1})). n = 2 is the Lebesgue constant of degree d.
ComputationResult lambda_poly_leq(int n, int d, double tol = kDefaultTolerance);

/// Dispatches on the family.
ComputationResult lambda(const SpaceId& space, double tol = kDefaultTolerance);

/// lambda(P_{<=d}(S^2)) in the form (d+1)/2 int |P_d^{(1,0)}(t)| dt.
ComputationResult lambda_poly_leq_sphere2(int d, double tol = kDefaultTolerance);

/// c_n int |k(t)| (1-t^2)^{(n-3)/2} dt evaluated directly from the closed
/// kernel in the angle variable t = cos(theta), split at the kernel zeros.
/// Independent of the Jacobi prefactor route used by lambda().
ComputationResult lambda_via_kernel(const SpaceId& space, double tol = kDefaultTolerance);

/// lambda(P_d(l_2^n(C))) = Gamma(n+d)Gamma(1+d/2) / (Gamma(1+d)Gamma(n+d/2)).
ComputationResult lambda_complex_homogeneous(int n, int d);

enum class Field { Real, Complex };

/// Projection constant of the n-dimensional real or complex Hilbert space.
ComputationResult lambda_hilbert(int n, Field field);

namespace debug {

/// Multiplies every Jacobi-route prefactor. Exists only so the verification
/// harness can prove that it detects a wrong prefactor; leave at 1.
void set_prefactor_scale(double scale);
double prefactor_scale();

}  // namespace debug

}  // namespace projconst
