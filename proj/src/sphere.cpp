#include "projconst/sphere.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "projconst/errors.hpp"
#include "projconst/gamma.hpp"

namespace projconst {

const char* family_name(Family family) {
  switch (family) {
    case Family::Homogeneous:
      return "homogeneous";
    case Family::PolyLeq:
      return "polyleq";
    case Family::Harmonic:
      break;
  }
  return "harmonic";
}

Family parse_family(std::string_view name) {
  if (name == "harmonic") return Family::Harmonic;
  if (name == "homogeneous") return Family::Homogeneous;
  if (name == "polyleq") return Family::PolyLeq;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::string to_string(const SpaceId& space) {
  return std::string(family_name(space.family)) + "(n=" + std::to_string(space.n) +
         ",d=" + std::to_string(space.d) + ")";
}

void validate(const SpaceId& space) {
  if (space.n < 2) throw DomainError("sphere dimension n must be at least 2");
  if (space.d < 0) throw DomainError("degree d must be non-negative");
}

double surface_area(int n) {
  if (n < 2) throw DomainError("surface_area: n must be at least 2");
  const double half = 0.5 * n;
  return 2.0 * std::exp(half * std::log(std::numbers::pi) - log_gamma(half));
}

namespace {

__extension__ using u128 = unsigned __int128;

int bit_width_of(long double approx_log2) {
  return static_cast<int>(std::floor(approx_log2)) + 1;
}

[[noreturn]] void overflow(const std::string& what, long double approx_log2) {
  throw OverflowError(what + " does not fit in 64 bits (needs about " +
                          std::to_string(bit_width_of(approx_log2)) + " bits)",
                      bit_width_of(approx_log2));
}

long double log2_binomial(std::uint64_t m, std::uint64_t k) {
  return (std::lgamma(static_cast<long double>(m) + 1) -
          std::lgamma(static_cast<long double>(k) + 1) -
          std::lgamma(static_cast<long double>(m - k) + 1)) /
         std::numbers::ln2_v<long double>;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    overflow(what, std::log2(static_cast<long double>(a) + static_cast<long double>(b)));
  }
  return out;
}

}  // namespace

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  u128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // c * (m - k + i) / i is exact: c = C(m-k+i-1, i-1).
    const u128 num = c * static_cast<u128>(m - k + i);
    if (num / static_cast<u128>(m - k + i) != c) overflow("binomial", log2_binomial(m, k));
    c = num / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) overflow("binomial", log2_binomial(m, k));
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t harmonic_dim(int n, int d) {
  if (n < 2) throw DomainError("harmonic_dim: n must be at least 2");
  if (d < 0) throw DomainError("harmonic_dim: d must be non-negative");
  if (d == 0) return 1;
  if (n == 2) return 2;
  // (n+2d-2)(n+d-3)!/(d!(n-2)!) = (n+2d-2) C(n+d-3, d) / (n-2)
  const std::uint64_t c = binomial(static_cast<std::uint64_t>(n + d - 3), static_cast<std::uint64_t>(d));
  const u128 prod = static_cast<u128>(c) * static_cast<u128>(n + 2 * d - 2);
  const u128 value = prod / static_cast<u128>(n - 2);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    overflow("harmonic dimension",
             std::log2(static_cast<long double>(c)) + std::log2(static_cast<long double>(n + 2 * d - 2)) -
                 std::log2(static_cast<long double>(n - 2)));
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t dim_space(const SpaceId& space) {
  validate(space);
  const auto n = static_cast<std::uint64_t>(space.n);
  const auto d = static_cast<std::uint64_t>(space.d);
  switch (space.family) {
    case Family::Harmonic:
      return harmonic_dim(space.n, space.d);
    case Family::Homogeneous:
      return binomial(n + d - 1, d);
    case Family::PolyLeq: {
      std::uint64_t total = 0;
      for (int k = 0; k <= space.d; ++k) total = checked_add(total, harmonic_dim(space.n, k), "dim P_{<=d}");
      return total;
    }
  }
  return 0;
}

double axial_constant(int n) {
  if (n < 2) throw DomainError("axial_constant: n must be at least 2");
  return std::exp(log_gamma_ratio({{0.5 * n}, {0.5 * (n - 1)}}) - 0.5 * std::log(std::numbers::pi));
}

namespace {

void require_multi_index(std::span<const int> alpha) {
  if (alpha.size() < 2) throw DomainError("monomial_moment: need at least 2 coordinates");
  for (int a : alpha) {
    if (a < 0) throw DomainError("monomial_moment: exponents must be non-negative");
  }
}

}  // namespace

double monomial_moment(std::span<const int> alpha) {
  require_multi_index(alpha);
  for (int a : alpha) {
    if (a % 2 != 0) return 0.0;
  }
  // Gamma(n/2) prod Gamma((a_i+1)/2) / (pi^{n/2} Gamma((|a|+n)/2))
  const double n = static_cast<double>(alpha.size());
  const int total = std::accumulate(alpha.begin(), alpha.end(), 0);
  GammaRatioSpec spec;
  spec.numerator_args.push_back(0.5 * n);
  for (int a : alpha) spec.numerator_args.push_back(0.5 * (a + 1));
  spec.denominator_args.push_back(0.5 * (total + n));
  for (std::size_t i = 0; i < alpha.size(); ++i) spec.denominator_args.push_back(0.5);
  return std::exp(log_gamma_ratio(spec));
}

mpq_class monomial_moment_exact(std::span<const int> alpha) {
  require_multi_index(alpha);
  for (int a : alpha) {
    if (a % 2 != 0) return mpq_class(0);
  }
  // With a_i = 2 k_i: prod (2k_i - 1)!! / prod_{j<K} (n + 2j), K = sum k_i.
  mpz_class num = 1;
  int half_total = 0;
  for (int a : alpha) {
    for (int odd = a - 1; odd > 0; odd -= 2) num *= odd;
    half_total += a / 2;
  }
  mpz_class den = 1;
  const long n = static_cast<long>(alpha.size());
  for (int j = 0; j < half_total; ++j) den *= n + 2 * j;
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace projconst
