#include <cmath>
#include <numbers>

#include "doctest.h"
#include "projconst/errors.hpp"
#include "projconst/projection.hpp"
#include "reference.hpp"

using namespace projconst;

namespace {

double rutovitz(int n) {
  return 2.0 * std::tgamma(0.5 * (n + 2)) / (std::sqrt(std::numbers::pi) * std::tgamma(0.5 * (n + 1)));
}

}  // namespace

TEST_SUITE("projection") {
  TEST_CASE("circle harmonics") {
    for (int d = 1; d <= 50; ++d) {
      const auto r = lambda_harmonic(2, d);
      CHECK(std::abs(r.value - 4.0 / std::numbers::pi) <= 1e-12);
      CHECK(r.method == Method::ClosedForm);
    }
  }

  TEST_CASE("degree one is the Hilbert space constant") {
    for (int n = 2; n <= 10; ++n) {
      CHECK(lambda_harmonic(n, 1).value == doctest::Approx(rutovitz(n)).epsilon(1e-10));
      CHECK(lambda_homogeneous(n, 1).value == doctest::Approx(rutovitz(n)).epsilon(1e-10));
      CHECK(lambda_hilbert(n, Field::Real).value == doctest::Approx(rutovitz(n)).epsilon(1e-14));
    }
    CHECK(lambda_homogeneous(3, 1).value == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(lambda_hilbert(2, Field::Real).value == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(lambda_hilbert(1, Field::Complex).value == doctest::Approx(1.0).epsilon(1e-15));
    for (int n = 1; n <= 8; ++n) {
      const double expected = 0.5 * std::sqrt(std::numbers::pi) * std::tgamma(n + 1.0) / std::tgamma(n + 0.5);
      CHECK(lambda_hilbert(n, Field::Complex).value == doctest::Approx(expected).epsilon(1e-13));
      CHECK(lambda_complex_homogeneous(n, 1).value == doctest::Approx(expected).epsilon(1e-13));
    }
  }

  TEST_CASE("exact small values") {
    CHECK(lambda_harmonic(3, 2).value == doctest::Approx(10.0 * std::sqrt(3.0) / 9.0).epsilon(1e-10));
    CHECK(lambda_poly_leq(2, 1).value ==
          doctest::Approx(1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi).epsilon(1e-11));
    for (int n = 2; n <= 6; ++n) {
      CHECK(lambda_poly_leq(n, 0).value == 1.0);
      CHECK(lambda_harmonic(n, 0).value == 1.0);
      CHECK(lambda_homogeneous(n, 0).value == 1.0);
    }
  }

  TEST_CASE("against the reference integrator") {
    for (int f = 0; f < 3; ++f) {
      for (int n = 2; n <= 6; ++n) {
        for (int d : {1, 2, 3, 6, 11}) {
          const SpaceId space{static_cast<Family>(f), n, d};
          const double expected = static_cast<double>(ref::lambda(f, n, d));
          CHECK(lambda(space).value == doctest::Approx(expected).epsilon(1e-10));
        }
      }
    }
  }

  TEST_CASE("Gronwall form on the two-sphere") {
    for (int d = 0; d <= 40; ++d) {
      CHECK(lambda_poly_leq(3, d).value == doctest::Approx(lambda_poly_leq_sphere2(d).value).epsilon(1e-10));
    }
  }

  TEST_CASE("kernel route agrees with the Jacobi route") {
    for (Family f : {Family::Harmonic, Family::Homogeneous, Family::PolyLeq}) {
      for (int n = 2; n <= 7; ++n) {
        for (int d : {0, 1, 2, 5, 9, 20}) {
          const SpaceId space{f, n, d};
          CHECK(lambda_via_kernel(space).value == doctest::Approx(lambda(space).value).epsilon(1e-10));
        }
      }
    }
  }

  TEST_CASE("every constant is at least one and errors are small") {
    for (Family f : {Family::Harmonic, Family::Homogeneous, Family::PolyLeq}) {
      for (int n = 2; n <= 8; ++n) {
        for (int d = 0; d <= 25; ++d) {
          const auto r = lambda({f, n, d});
          CHECK(r.value >= 1.0 - 1e-12);
          CHECK(r.abs_err >= 0.0);
          CHECK(r.abs_err <= 1e-8 * r.value);
        }
      }
    }
  }

  TEST_CASE("homogeneous constants increase with the degree") {
    for (int n : {3, 4}) {
      double prev = lambda_homogeneous(n, 1).value;
      for (int d = 2; d <= 60; ++d) {
        const double cur = lambda_homogeneous(n, d).value;
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }

  TEST_CASE("degree two as the dimension grows") {
    double prev = 0.0;
    for (int n = 3; n <= 40; ++n) {
      const double v = lambda_homogeneous(n, 2).value;
      CHECK(v / n > 0.1);
      CHECK(v / n < 10.0);
      CHECK(v > prev);
      prev = v;
    }
  }

  TEST_CASE("complex homogeneous reference") {
    for (int d = 0; d <= 30; ++d) CHECK(lambda_complex_homogeneous(1, d).value == doctest::Approx(1.0));
    CHECK(lambda_complex_homogeneous(2, 2).value == doctest::Approx(1.5).epsilon(1e-15));
    for (int n = 2; n <= 6; ++n) {
      const double cap = std::ldexp(1.0, n - 1);
      CHECK(std::abs(lambda_complex_homogeneous(n, 1000000).value - cap) < 1e-3 * cap);
      for (int d = 0; d <= 500; ++d) CHECK(lambda_complex_homogeneous(n, d).value <= cap);
    }
  }

  TEST_CASE("large degree stays finite") {
    const auto r = lambda_poly_leq(3, 10000);
    CHECK(std::isfinite(r.value));
    CHECK(r.value / 100.0 == doctest::Approx(2.0 * std::sqrt(2.0 / std::numbers::pi)).epsilon(0.01));
  }

  TEST_CASE("arguments are validated") {
    CHECK_THROWS_AS(lambda_harmonic(1, 3), DomainError);
    CHECK_THROWS_AS(lambda_poly_leq(3, -1), DomainError);
    CHECK_THROWS_AS(lambda_complex_homogeneous(0, 3), DomainError);
    CHECK_THROWS_AS(lambda_harmonic(5, 40, 1e-300), ToleranceError);
  }

  TEST_CASE("debug prefactor scale") {
    CHECK(debug::prefactor_scale() == 1.0);
    const double base = lambda_harmonic(4, 3).value;
    debug::set_prefactor_scale(2.0);
    CHECK(lambda_harmonic(4, 3).value == doctest::Approx(2 * base));
    debug::set_prefactor_scale(1.0);
    CHECK(lambda_harmonic(4, 3).value == base);
  }
}
