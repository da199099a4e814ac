#include <cmath>
#include <numbers>

#include "doctest.h"
#include "projconst/errors.hpp"
#include "projconst/gamma.hpp"

using namespace projconst;

TEST_SUITE("gamma") {
  TEST_CASE("log_gamma at half and integers") {
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-15));
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(log_gamma(11.0) == doctest::Approx(std::log(3628800.0)).epsilon(1e-15));
  }

  TEST_CASE("log_gamma against lgamma over a wide range") {
    double worst = 0.0;
    for (double x = 1e-3; x < 1e8; x *= 1.07) {
      const double expected = std::lgamma(x);
      const double got = log_gamma(x);
      const bool near_zero = std::abs(x - 1.0) < 0.2 || std::abs(x - 2.0) < 0.2;
      const double err = near_zero ? std::abs(got - expected) : std::abs(got / expected - 1.0);
      worst = std::max(worst, err);
    }
    CHECK(worst < 2e-15);
  }

  TEST_CASE("log_gamma_scaled is the Stirling remainder") {
    for (double x : {0.7, 3.0, 15.0, 40.0, 1e3}) {
      const double stirling = (x - 0.5) * std::log(x) - x + 0.5 * std::log(2 * std::numbers::pi);
      CHECK(log_gamma_scaled(x) == doctest::Approx(std::lgamma(x) - stirling).epsilon(1e-9));
    }
    CHECK(log_gamma_scaled(1e6) == doctest::Approx(1.0 / 12e6).epsilon(1e-10));
  }

  TEST_CASE("recurrence Gamma(x+1) = x Gamma(x)") {
    for (int i = 1; i <= 400; ++i) {
      const double x = 0.25 * i;
      CHECK(gamma_ratio({{x + 1.0}, {x}}) == doctest::Approx(x).epsilon(1e-13));
    }
  }

  TEST_CASE("duplication formula residual") {
    for (double x = 1e-3; x < 1e7; x *= 1.3) CHECK(duplication_residual(x) < 1e-12);
  }

  TEST_CASE("ratio of large gammas stays finite") {
    // Gamma(d + 3) / Gamma(d + 5/2) ~ sqrt(d) at d = 1e4.
    const double r = gamma_ratio({{1e4 + 3.0}, {1e4 + 2.5}});
    // Gamma(x + 1/2) / Gamma(x) = sqrt(x) (1 - 1/(8x) + O(x^-2)).
    CHECK(r == doctest::Approx(std::sqrt(1e4 + 2.5) * (1 - 1.0 / (8 * (1e4 + 2.5)))).epsilon(1e-8));
    CHECK(log_gamma_difference(1e10 + 0.5, 1e10) == doctest::Approx(0.5 * std::log(1e10)).epsilon(1e-12));
  }

  TEST_CASE("gamma_ratio overflow is reported") {
    CHECK_THROWS_AS(gamma_ratio({{400.0}, {1.0}}), OverflowError);
  }

  TEST_CASE("beta symmetry and values") {
    CHECK(beta(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(beta(0.5, 0.5) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    for (double a : {0.3, 1.7, 25.0}) {
      for (double b : {0.6, 4.0, 1e3}) CHECK(log_beta(a, b) == log_beta(b, a));
    }
  }
}
