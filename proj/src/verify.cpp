#include "projconst/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "json.hpp"
#include "projconst/asymptotics.hpp"
#include "projconst/gamma.hpp"
#include "projconst/kernels.hpp"
#include "projconst/orthopoly.hpp"
#include "projconst/projection.hpp"
#include "projconst/quadrature.hpp"
#include "projconst/record.hpp"
#include "projconst/sphere.hpp"

namespace projconst {

namespace {

std::string json_number(double x) { return std::isfinite(x) ? format_roundtrip(x) : "null"; }

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

std::string VerifyReport::render() const {
  std::string out;
  for (const CheckResult& c : checks) {
    out += "{\"id\":" + nlohmann::json(c.id).dump() + ",\"pass\":" + (c.pass ? "true" : "false") +
           ",\"expected\":" + json_number(c.expected) + ",\"got\":" + json_number(c.got) +
           ",\"tolerance\":" + json_number(c.tolerance);
    if (!c.detail.empty()) out += ",\"detail\":" + nlohmann::json(c.detail).dump();
    out += "}\n";
  }
  out += "{\"summary\":{\"checks\":" + std::to_string(checks.size()) +
         ",\"passed\":" + std::to_string(checks.size() - failures()) +
         ",\"failed\":" + std::to_string(failures()) +
         ",\"quick\":" + (options.quick ? "true" : "false") +
         ",\"seed\":" + std::to_string(options.seed) + "}}\n";
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void abs(std::string id, double expected, double got, double tol) {
    const bool ok = std::isfinite(got) && std::abs(got - expected) <= tol;
    report_.checks.push_back({std::move(id), expected, got, tol, ok});
  }

  void rel(std::string id, double expected, double got, double tol) {
    const bool ok = std::isfinite(got) && std::abs(got - expected) <= tol * std::abs(expected);
    report_.checks.push_back({std::move(id), expected, got, tol, ok});
  }

  /// got must not exceed the bound.
  void at_most(std::string id, double bound, double got) {
    const bool ok = std::isfinite(got) && got <= bound;
    report_.checks.push_back({std::move(id), 0.0, got, bound, ok});
  }

  /// Runs body; an exception becomes a failed check.
  template <typename F>
  void guarded(const std::string& id, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report_.checks.push_back({id + ".exception", 0.0, std::nan(""), 0.0, false, e.what()});
    }
  }

 private:
  VerifyReport& report_;
};

struct Scale {
  int n_max_small;   // sphere dims for kernel checks
  int d_max_kernel;  // degree for kernel checks
  int n_max_oracle;
  int d_max_oracle;
  int t_samples;
};

void gamma_checks(Checker& c) {
  c.guarded("gamma", [&] {
    c.rel("gamma.log_gamma.half", 0.5 * std::log(std::numbers::pi), log_gamma(0.5), 1e-14);
    double worst = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double x = 0.5 * i;
      worst = std::max(worst, std::abs(gamma_ratio({{x + 1.0}, {x}}) / x - 1.0));
    }
    c.at_most("gamma.recurrence.max_rel", 1e-13, worst);
    double dup = 0.0;
    for (double x = 1e-2; x <= 1e6; x *= 1.5) dup = std::max(dup, duplication_residual(x));
    c.at_most("gamma.duplication.max_residual", 1e-12, dup);
  });
}

void orthopoly_checks(Checker& c, const Scale& s, std::mt19937_64& rng) {
  c.guarded("orthopoly", [&] {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double worst = 0.0;
    const int n_max = s.n_max_small >= 6 ? 8 : s.n_max_small;
    const int d_max = std::min(s.d_max_kernel, 25);
    for (int n = 2; n <= n_max; ++n) {
      const double alpha = 0.5 * (n - 3);
      for (int d = 0; d <= d_max; ++d) {
        const double scale = std::exp(log_gamma_ratio({{d + 1.0, 0.5 * (n - 1)}, {0.5 * (n - 1) + d}}));
        const JacobiRecurrence poly({alpha, alpha, d});
        for (int k = 0; k < s.t_samples; ++k) {
          const double t = unit(rng);
          const double direct = legendre_nd_eval(n, d, t);
          const double via_jacobi = scale * poly(t);
          worst = std::max(worst, std::abs(direct - via_jacobi) / std::max(1.0, std::abs(direct)));
        }
      }
    }
    c.at_most("orthopoly.legendre_vs_jacobi.max_rel", 1e-10, worst);
    const auto roots = jacobi_roots({0.0, 0.0, 2});
    c.abs("orthopoly.roots.legendre2.hi", 1.0 / std::sqrt(3.0), roots.at(1), 1e-15);
  });
}

void quadrature_checks(Checker& c) {
  c.guarded("quadrature", [&] {
    for (int n = 3; n <= 8; ++n) {
      const double a = 0.5 * (n - 1);
      const auto r = integrate_abs_jacobi({a, a, 1}, 0.5 * (n - 3), 1e-13);
      c.rel("quadrature.remark_integral.n" + std::to_string(n), (n + 1.0) / (n - 1.0), r.value, 1e-11);
    }
    c.rel("quadrature.legendre2_abs", 4.0 / (3.0 * std::sqrt(3.0)),
          integrate_abs_jacobi({0, 0, 2}, 0.0, 1e-14).value, 1e-13);
    c.rel("quadrature.dirichlet_full.d1", 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi,
          dirichlet_lebesgue(1, DirichletKind::Full, 1e-12).value, 1e-11);
  });
}

void sphere_checks(Checker& c, bool quick) {
  c.guarded("sphere", [&] {
    const int n_max = quick ? 3 : 12;
    const int d_max = quick ? 4 : 60;
    double bad = 0.0;
    for (int n = 2; n <= n_max; ++n) {
      for (int d = 0; d <= d_max; ++d) {
        const auto hom = dim_space({Family::Homogeneous, n, d});
        const auto har = dim_space({Family::Harmonic, n, d});
        const auto leq = dim_space({Family::PolyLeq, n, d});
        if (d >= 2 && hom != har + dim_space({Family::Homogeneous, n, d - 2})) bad += 1;
        std::uint64_t total = 0;
        for (int k = 0; k <= d; ++k) total += harmonic_dim(n, k);
        if (leq != total) bad += 1;
      }
    }
    c.abs("sphere.dimension_identities.violations", 0.0, bad, 0.0);
    double norm_worst = 0.0;
    for (int n = 2; n <= 10; ++n) {
      const double g = 0.5 * (n - 3);
      const auto rule = gauss_jacobi_rule(g, g, 4);
      double mass = 0.0;
      for (double w : rule.weights) mass += w;
      norm_worst = std::max(norm_worst, std::abs(axial_constant(n) * mass - 1.0));
    }
    c.at_most("sphere.axial_normalization.max_rel", 1e-11, norm_worst);
  });
}

void kernel_checks(Checker& c, const Scale& s, std::mt19937_64& rng) {
  c.guarded("kernels", [&] {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double diag = 0.0, l2 = 0.0, equiv = 0.0;
    for (Family f : {Family::Harmonic, Family::Homogeneous, Family::PolyLeq}) {
      for (int n = 2; n <= s.n_max_small; ++n) {
        for (int d = 0; d <= s.d_max_kernel; ++d) {
          const SpaceId space{f, n, d};
          const double dim = static_cast<double>(dim_space(space));
          const ClosedKernel closed(space);
          diag = std::max(diag, std::abs(kernel_axial_sum(space, 1.0) / dim - 1.0));
          diag = std::max(diag, std::abs(closed(1.0) / dim - 1.0));
          l2 = std::max(l2, std::abs(kernel_l2_norm(space).value / std::sqrt(dim) - 1.0));
          if (n >= 3) {
            for (int k = 0; k < s.t_samples; ++k) {
              const double t = unit(rng);
              equiv = std::max(equiv, std::abs(kernel_axial_sum(space, t) - closed(t)) / dim);
            }
          }
        }
      }
    }
    c.at_most("kernels.diagonal_equals_dim.max_rel", 1e-10, diag);
    c.at_most("kernels.l2_norm_sqrt_dim.max_rel", 1e-8, l2);
    c.at_most("kernels.sum_vs_closed.max_over_dim", 1e-9, equiv);
  });
}

void oracle_checks(Checker& c, const Scale& s) {
  c.guarded("oracle", [&] {
    double worst = 0.0;
    double card_mismatch = 0.0;
    for (Family f : {Family::Harmonic, Family::Homogeneous, Family::PolyLeq}) {
      for (int n = 2; n <= s.n_max_oracle; ++n) {
        for (int d = 0; d <= s.d_max_oracle; ++d) {
          const SpaceId space{f, n, d};
          const GramBasis basis = gram_basis(space);
          const auto dim = dim_space(space);
          if (basis.size() != dim) card_mismatch += 1;
          for (int k = 0; k < 50; ++k) {
            const double t = -1.0 + 2.0 * k / 49.0;
            worst = std::max(worst, std::abs(kernel_bruteforce(basis, t) - kernel_axial_sum(space, t)) /
                                        static_cast<double>(dim));
          }
        }
      }
    }
    c.abs("oracle.gram_cardinality.mismatches", 0.0, card_mismatch, 0.0);
    c.at_most("oracle.bruteforce_vs_fast.max_over_dim", 1e-8, worst);
  });
}

void lambda_checks(Checker& c, const Scale& s, bool quick) {
  c.guarded("lambda", [&] {
    double worst = 0.0;
    for (int d = 1; d <= 50; ++d) {
      worst = std::max(worst, std::abs(lambda_harmonic(2, d).value - 4.0 / std::numbers::pi));
    }
    c.at_most("lambda.harmonic_n2.max_abs", 1e-12, worst);

    for (int n = 2; n <= (quick ? 4 : 10); ++n) {
      const double ref = 2.0 * std::exp(log_gamma(0.5 * (n + 2)) - log_gamma(0.5 * (n + 1))) /
                         std::sqrt(std::numbers::pi);
      c.rel("lambda.rutovitz.harmonic.n" + std::to_string(n), ref, lambda_harmonic(n, 1).value, 1e-10);
      c.rel("lambda.rutovitz.homogeneous.n" + std::to_string(n), ref, lambda_homogeneous(n, 1).value, 1e-10);
    }
    c.rel("lambda.harmonic.n3d2", 10.0 * std::sqrt(3.0) / 9.0, lambda_harmonic(3, 2).value, 1e-10);
    c.rel("lambda.polyleq.n2d1", 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi,
          lambda_poly_leq(2, 1).value, 1e-11);

    double gron = 0.0;
    for (int d = 0; d <= (quick ? 4 : 40); ++d) {
      const double a = lambda_poly_leq(3, d).value;
      const double b = lambda_poly_leq_sphere2(d).value;
      gron = std::max(gron, std::abs(a / b - 1.0));
    }
    c.at_most("lambda.gronwall_form.max_rel", 1e-10, gron);

    double route = 0.0;
    for (Family f : {Family::Harmonic, Family::Homogeneous, Family::PolyLeq}) {
      for (int n = 2; n <= s.n_max_small; ++n) {
        for (int d = 1; d <= std::min(s.d_max_kernel, 12); ++d) {
          const SpaceId space{f, n, d};
          route = std::max(route, std::abs(lambda_via_kernel(space).value / lambda(space).value - 1.0));
        }
      }
    }
    c.at_most("lambda.kernel_route_vs_jacobi_route.max_rel", 1e-10, route);

    double bound_violation = 0.0;
    for (int n = 2; n <= 6; ++n) {
      const double cap = std::ldexp(1.0, n - 1);
      for (int d = 0; d <= 200; ++d) {
        bound_violation = std::max(bound_violation, lambda_complex_homogeneous(n, d).value - cap);
      }
      c.rel("lambda.complex_homogeneous.limit.n" + std::to_string(n), cap,
            lambda_complex_homogeneous(n, 1000000).value, 1e-3);
    }
    c.at_most("lambda.complex_homogeneous.bound_excess", 0.0, bound_violation);
  });
}

void asymptotic_checks(Checker& c, bool quick) {
  c.guarded("asymptotics", [&] {
    double bridge = 0.0;
    for (int n = 3; n <= 20; ++n) {
      const double a = limit_constant({Family::Harmonic, n, Normalization::DimSqrt});
      const double b = limit_constant({Family::Harmonic, n, Normalization::DPower});
      bridge = std::max(bridge, std::abs(a * std::sqrt(2.0 / std::tgamma(n - 1.0)) / b - 1.0));
    }
    c.at_most("asymptotics.dim_sqrt_vs_d_power.max_rel", 1e-12, bridge);
    c.rel("asymptotics.polyleq.n3", 2.0 * std::sqrt(2.0 / std::numbers::pi),
          limit_constant({Family::PolyLeq, 3, Normalization::DPower}), 1e-14);
    c.rel("asymptotics.homogeneous.n4", 2.0 / std::numbers::pi,
          limit_constant({Family::Homogeneous, 4, Normalization::DPower}), 1e-14);
    if (quick) return;
    const auto deviation = [](Family f, int n, int d) {
      const LimitSpec spec{f, n, Normalization::DPower};
      const double ratio = lambda({f, n, d}).value / normalization_value(spec, d);
      return std::abs(ratio / limit_constant(spec) - 1.0);
    };
    for (Family f : {Family::Harmonic, Family::PolyLeq}) {
      const std::string id = std::string("asymptotics.") + family_name(f) + ".n3";
      const double far = deviation(f, 3, 2000);
      c.at_most(id + ".d2000.rel_deviation", 0.02, far);
      c.at_most(id + ".improves_from_d200", std::nextafter(deviation(f, 3, 200), 0.0), far);
    }
    c.at_most("asymptotics.homogeneous.n4.d2000.rel_deviation", 0.05,
              deviation(Family::Homogeneous, 4, 2000));
    const double l3 = lambda_poly_leq(2, 1000).value;
    const double l4 = lambda_poly_leq(2, 10000).value;
    c.rel("asymptotics.lebesgue.log_difference", 4.0 / (std::numbers::pi * std::numbers::pi) * std::log(10.0),
          l4 - l3, 0.01);
  });
}

void montecarlo_checks(Checker& c, std::uint64_t seed) {
  c.guarded("montecarlo", [&] {
    const auto ones = montecarlo_sphere(3, [](std::span<const double>) { return 1.0; }, 10000, seed);
    c.abs("montecarlo.constant", 1.0, ones.estimate, 0.0);
    const ClosedKernel kernel({Family::Harmonic, 3, 2});
    const auto est = montecarlo_sphere(
        3, [&](std::span<const double> x) { return std::abs(kernel(x[0])); }, 1000000, seed);
    const double exact = 10.0 * std::sqrt(3.0) / 9.0;
    c.abs("montecarlo.lambda_h3d2.within_4_sigma", exact, est.estimate, 4.0 * est.std_error);
    const auto second = montecarlo_sphere(4, [](std::span<const double> x) { return x[0] * x[0]; },
                                          1000000, seed);
    c.abs("montecarlo.moment_x1sq.n4.within_4_sigma", 0.25, second.estimate, 4.0 * second.std_error);

    // Axial reduction: the sphere average of f(x_1) against the weighted 1-D integral.
    const std::pair<const char*, double (*)(double)> profiles[] = {
        {"t_squared", [](double t) { return t * t; }},
        {"abs_t", [](double t) { return std::abs(t); }},
        {"legendre_n5_d3", [](double t) { return legendre_nd_eval(5, 3, t); }},
    };
    const int n = 5;
    const double g = 0.5 * (n - 3);
    for (const auto& [name, f] : profiles) {
      double reduced = 0.0;
      for (const auto& [lo, hi] : {std::pair{-1.0, 0.0}, std::pair{0.0, 1.0}}) {
        const auto rule = gauss_jacobi_rule(g, g, 12, lo, hi);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) reduced += rule.weights[i] * f(rule.nodes[i]);
      }
      reduced *= axial_constant(n);
      const auto mc = montecarlo_sphere(
          n, [f = f](std::span<const double> x) { return f(x[0]); }, 200000, seed);
      c.abs(std::string("montecarlo.axial_reduction.") + name, reduced, mc.estimate, 4.0 * mc.std_error);
    }
  });
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report{options, {}};
  Checker checker(report);
  std::mt19937_64 rng(options.seed);
  const Scale scale = options.quick ? Scale{3, 4, 3, 4, 20} : Scale{6, 30, 4, 5, 1000};

  const double saved = debug::prefactor_scale();
  if (options.inject_fault) debug::set_prefactor_scale(1.001);

  gamma_checks(checker);
  orthopoly_checks(checker, scale, rng);
  quadrature_checks(checker);
  sphere_checks(checker, options.quick);
  kernel_checks(checker, scale, rng);
  oracle_checks(checker, scale);
  lambda_checks(checker, scale, options.quick);
  asymptotic_checks(checker, options.quick);
  if (!options.quick) montecarlo_checks(checker, options.seed);

  debug::set_prefactor_scale(saved);
  return report;
}

}  // namespace projconst
