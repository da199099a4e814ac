#pragma once

#include <optional>
#include <span>

#include "projconst/orthopoly.hpp"
#include "projconst/result.hpp"
#include "projconst/sphere.hpp"

namespace projconst {

enum class KernelRepresentation { SumOfLegendre, ClosedJacobi };

/// The axial slice t -> k_S(e_1, eta) with eta_1 = t, in one of its two forms.
struct KernelForm {
  SpaceId space;
  KernelRepresentation representation = KernelRepresentation::ClosedJacobi;
};

/// Sum over the harmonic components, N_{n,k} L°_{n,k}(t).
double kernel_axial_sum(const SpaceId& space, double t);

/// Collapsed form: a single scaled Jacobi polynomial for n >= 3, and the
/// Dirichlet-type trigonometric kernels for n = 2.
class ClosedKernel {
 public:
  explicit ClosedKernel(const SpaceId& space);

  const SpaceId& space() const { return space_; }

  /// Scale applied to the Jacobi polynomial (n >= 3 only).
  double prefactor() const { return prefactor_; }

  /// The Jacobi polynomial the kernel is proportional to (n >= 3 only).
  const std::optional<JacobiParams>& jacobi() const { return jacobi_; }

  double operator()(double t) const;
  void evaluate(std::span<const double> t, std::span<double> out) const;

 private:
  double trigonometric(double t) const;

  SpaceId space_;
  double prefactor_ = 1.0;
  std::optional<JacobiParams> jacobi_;
  std::optional<JacobiRecurrence> recurrence_;
};

double kernel_axial_closed(const SpaceId& space, double t);

double kernel_eval(const KernelForm& form, double t);

/// (c_n int k(t)^2 (1-t^2)^{(n-3)/2} dt)^{1/2}, which equals sqrt(dim).
ComputationResult kernel_l2_norm(const SpaceId& space, double tol = 1e-8);

}  // namespace projconst
