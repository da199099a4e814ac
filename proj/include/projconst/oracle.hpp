#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "projconst/sphere.hpp"

namespace projconst {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Orthonormal basis (w.r.t. sigma_n) of a space, written in a monomial
/// spanning set: row r of `coefficients` holds the coefficients of the r-th
/// basis function against `monomials`.
struct GramBasis {
  SpaceId space;
  std::vector<std::vector<int>> monomials;
  std::vector<std::vector<double>> coefficients;

  std::size_t size() const { return coefficients.size(); }
  double evaluate(std::size_t row, std::span<const double> x) const;
};

/// Gram-Schmidt with exact rational moments; harmonic bases are the
/// orthogonal complement of the degree d-2 span inside the degree d span.
/// Oracle scale only: n in {2,3,4}, d <= 6.
GramBasis gram_basis(const SpaceId& space);

/// Gram matrix of the basis (row-major, size x size), built from exact
/// moments converted to double.
std::vector<double> basis_gram_matrix(const GramBasis& basis);

/// sum_j f_j(e_1) f_j(y) with y = (t, sqrt(1-t^2), 0, ..., 0).
double kernel_bruteforce(const GramBasis& basis, double t);
double kernel_bruteforce(const SpaceId& space, double t);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

using SphereFunction = std::function<double(std::span<const double>)>;

/// Estimate of int f dsigma_n from normalized Gaussian vectors. Samples are
/// drawn in fixed-size chunks with per-chunk seeds derived from `seed`, and
/// chunk statistics are merged in chunk order, so the result depends only on
/// (n, f, samples, seed).
MonteCarloEstimate montecarlo_sphere(int n, const SphereFunction& f, long samples,
                                     std::uint64_t seed = kDefaultSeed);

}  // namespace projconst
