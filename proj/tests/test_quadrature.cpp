#include <cmath>
#include <numbers>

#include "doctest.h"
#include "projconst/errors.hpp"
#include "projconst/gamma.hpp"
#include "projconst/quadrature.hpp"
#include "reference.hpp"

using namespace projconst;

namespace {

double weight_mass(double a, double b) { return std::pow(2.0, a + b + 1) * beta(a + 1, b + 1); }

double apply(const QuadratureRule& rule, auto f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("midpoint rule") {
    const auto r = gauss_jacobi_rule(0.0, 0.0, 1);
    REQUIRE(r.nodes.size() == 1);
    CHECK(r.nodes[0] == doctest::Approx(0.0));
    CHECK(r.weights[0] == doctest::Approx(2.0));
  }

  TEST_CASE("weights sum to the weight mass") {
    for (double a : {-0.5, 0.0, 0.5, 1.0, 3.5}) {
      for (double b : {-0.5, 0.0, 1.5}) {
        for (int m : {1, 2, 7, 40}) {
          const auto r = gauss_jacobi_rule(a, b, m);
          double sum = 0.0;
          for (double w : r.weights) {
            CHECK(w > 0.0);
            sum += w;
          }
          CHECK(sum == doctest::Approx(weight_mass(a, b)).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("exact up to degree 2m-1") {
    const int m = 9;
    for (double a : {-0.5, 0.5, 2.0}) {
      const auto r = gauss_jacobi_rule(a, a, m);
      CHECK(std::abs(apply(r, [](double t) { return std::pow(t, 2 * m - 1); })) < 1e-14);
      for (int k = 0; k <= 2 * m - 2; k += 2) {
        // int t^k (1-t^2)^a dt = B((k+1)/2, a+1).
        CHECK(apply(r, [&](double t) { return std::pow(t, k); }) ==
              doctest::Approx(beta(0.5 * (k + 1), a + 1)).epsilon(1e-12));
      }
    }
    const auto half = gauss_jacobi_rule(0.5, 0.5, 20);
    CHECK(apply(half, [](double) { return 1.0; }) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  }

  TEST_CASE("subinterval rules keep the global weight") {
    for (double a : {-0.5, 0.0, 1.5}) {
      const double lo_b = 0.25;
      const double pieces[] = {-1.0, -0.3, 0.4, 1.0};
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) {
        const auto r = gauss_jacobi_rule(a, lo_b, 30, pieces[k], pieces[k + 1]);
        CHECK(r.lo == pieces[k]);
        CHECK(r.hi == pieces[k + 1]);
        sum += apply(r, [](double t) { return 1.0 + t * t; });
      }
      const auto whole = gauss_jacobi_rule(a, lo_b, 30);
      CHECK(sum == doctest::Approx(apply(whole, [](double t) { return 1.0 + t * t; })).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gauss_jacobi_rule(0.0, 0.0, 4, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(gauss_jacobi_rule(-1.0, 0.0, 4), DomainError);
    CHECK_THROWS_AS(gauss_jacobi_rule(0.0, 0.0, 0), DomainError);
  }

  TEST_CASE("absolute Jacobi integrals with closed values") {
    CHECK(integrate_abs_jacobi({0, 0, 1}, 0.0, 1e-12).value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(integrate_abs_jacobi({0, 0, 2}, 0.0, 1e-12).value ==
          doctest::Approx(4.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-13));
    for (int n = 3; n <= 8; ++n) {
      const double a = 0.5 * (n - 1);
      const auto r = integrate_abs_jacobi({a, a, 1}, 0.5 * (n - 3), 1e-12);
      CHECK(r.value == doctest::Approx((n + 1.0) / (n - 1.0)).epsilon(1e-11));
      CHECK(r.abs_err <= 1e-12);
    }
    // Degree zero reduces to the weight mass.
    CHECK(integrate_abs_jacobi({0.5, 0.5, 0}, -0.5, 1e-12).value == doctest::Approx(std::numbers::pi).epsilon(1e-13));
  }

  TEST_CASE("absolute Jacobi integrals against the reference integrator") {
    for (int n : {2, 3, 4, 5, 7}) {
      const double g = 0.5 * (n - 3);
      for (int d : {1, 2, 5, 13, 40}) {
        for (auto [a, b] : {std::pair{g, g}, std::pair{g + 1, g}, std::pair{g + 1, g + 1}}) {
          const auto got = integrate_abs_jacobi({a, b, d}, g, 1e-11);
          const double expected = static_cast<double>(ref::abs_integral_theta(
              [&](ref::real t) { return ref::jacobi(a, b, d, t); }, n - 2, 2000));
          INFO("n=" << n << " d=" << d << " a=" << a << " b=" << b);
          CHECK(std::abs(got.value - expected) <= got.abs_err + 1e-12 * expected);
        }
      }
    }
  }

  TEST_CASE("triangle bounds and symmetric halves") {
    for (int n : {3, 4, 5}) {
      const double g = 0.5 * (n - 3);
      for (int d = 1; d <= 40; d += 3) {
        const JacobiParams p{g, g, d};
        const double abs_int = integrate_abs_jacobi(p, g, 1e-11).value;
        const double signed_int =
            std::abs(apply(gauss_jacobi_rule(g, g, d + 2), [&](double t) { return jacobi_eval(p, t); }));
        const double sup = std::max(std::abs(jacobi_eval(p, 1.0)), std::abs(jacobi_eval(p, -1.0)));
        CHECK(abs_int + 1e-12 >= signed_int);
        CHECK(abs_int <= sup * weight_mass(g, g) * (1 + 1e-12));
        const double left = integrate_abs_jacobi(p, g, 1e-12, {-1.0, 0.0}).value;
        const double right = integrate_abs_jacobi(p, g, 1e-12, {0.0, 1.0}).value;
        CHECK(left == doctest::Approx(right).epsilon(1e-11));
        CHECK(left + right == doctest::Approx(abs_int).epsilon(1e-11));
      }
    }
  }

  TEST_CASE("unreachable tolerance is reported") {
    try {
      integrate_abs_jacobi({1.0, 1.0, 60}, 0.0, 1e-300);
      FAIL("expected ToleranceError");
    } catch (const ToleranceError& e) {
      CHECK(e.achieved() > 0.0);
      CHECK(e.requested() == 1e-300);
    }
    CHECK_THROWS_AS(integrate_abs_jacobi({0, 0, 2}, -1.0, 1e-10), DomainError);
    CHECK_THROWS_AS(integrate_abs_jacobi({0, 0, 2}, 0.0, 0.0), DomainError);
  }

  TEST_CASE("Dirichlet-Lebesgue integrals") {
    CHECK(dirichlet_lebesgue(0, DirichletKind::Full).value == 1.0);
    CHECK(dirichlet_lebesgue(0, DirichletKind::Half).value == 1.0);
    CHECK(dirichlet_lebesgue(1, DirichletKind::Full).value ==
          doctest::Approx(1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi).epsilon(1e-12));
    const ref::real pi = std::numbers::pi_v<ref::real>;
    for (int d : {1, 2, 3, 10, 57}) {
      for (auto kind : {DirichletKind::Full, DirichletKind::Half}) {
        const ref::real freq = kind == DirichletKind::Full ? d + 0.5L : (d + 1) / 2.0L;
        // Arches of the numerator on (0, pi], then doubled.
        ref::real total = 0;
        ref::real start = 0;
        for (int k = 1;; ++k) {
          const ref::real end = std::min(pi, k * pi / freq);
          total += std::abs(ref::gl_integrate(
              [&](ref::real t) { return t == 0 ? 2 * freq : std::sin(freq * t) / std::sin(t / 2); }, start,
              end, 32));
          if (end >= pi) break;
          start = end;
        }
        const auto got = dirichlet_lebesgue(d, kind, 1e-12);
        CHECK(got.value == doctest::Approx(static_cast<double>(total / pi)).epsilon(1e-12));
      }
    }
  }
}
