#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <span>
#include <string>
#include <string_view>

namespace projconst {

enum class Family { Harmonic, Homogeneous, PolyLeq };

const char* family_name(Family family);
Family parse_family(std::string_view name);  // throws DomainError

/// H_d(S^{n-1}), P_d(S^{n-1}) or P_{<=d}(S^{n-1}).
struct SpaceId {
  Family family = Family::Harmonic;
  int n = 2;
  int d = 0;

  friend bool operator==(const SpaceId&, const SpaceId&) = default;
};

std::string to_string(const SpaceId& space);

/// Throws DomainError unless n >= 2 and d >= 0.
void validate(const SpaceId& space);

/// Surface area of S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double surface_area(int n);

/// Exact binomial coefficient; throws OverflowError past 64 bits.
std::uint64_t binomial(std::uint64_t m, std::uint64_t k);

/// N_{n,d} = dim H_d(S^{n-1}) by its closed formula.
std::uint64_t harmonic_dim(int n, int d);

/// Exact dimension of the space; throws OverflowError (carrying the number
/// of bits the value needs) when it does not fit in 64 bits.
std::uint64_t dim_space(const SpaceId& space);

/// c_n with int_{S^{n-1}} f(eta_1) dsigma = c_n int_{-1}^{1} f(t) (1-t^2)^{(n-3)/2} dt.
double axial_constant(int n);

/// int_{S^{n-1}} x^alpha dsigma_n for the normalized surface measure.
double monomial_moment(std::span<const int> multi_index);

/// Same moment as an exact rational (every sphere moment is rational).
mpq_class monomial_moment_exact(std::span<const int> multi_index);

}  // namespace projconst
