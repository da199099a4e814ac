// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "projconst/asymptotics.hpp"
#include "projconst/kernels.hpp"
#include "projconst/oracle.hpp"
#include "projconst/projection.hpp"
#include "projconst/quadrature.hpp"
#include "projconst/sphere.hpp"
#include "reference.hpp"

using namespace projconst;

namespace {

constexpr Family kFamilies[] = {Family::Harmonic, Family::Homogeneous, Family::PolyLeq};
const double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

Outcome c1() {
  Outcome o;
  double worst = 0.0, slowest = 0.0;
  for (int d = 1; d <= 50; ++d) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = lambda_harmonic(2, d);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    slowest = std::max(slowest, ms);
    worst = std::max(worst, std::abs(r.value - 4.0 / kPi));
    o.require(r.method == Method::ClosedForm, "not closed form at d=" + std::to_string(d));
  }
  o.require(worst <= 1e-12, "max abs error " + fmt(worst));
  o.require(slowest < 1.0, "slowest call " + fmt(slowest) + " ms");
  o.note = o.pass ? "max abs error " + fmt(worst) + ", slowest " + fmt(slowest) + " ms" : o.note;
  return o;
}

Outcome c2() {
  Outcome o;
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const double expected =
        2.0 * std::exp(std::lgamma(0.5 * (n + 2)) - std::lgamma(0.5 * (n + 1))) / std::sqrt(kPi);
    for (double v : {lambda_harmonic(n, 1).value, lambda_homogeneous(n, 1).value}) {
      worst = std::max(worst, std::abs(v / expected - 1.0));
    }
  }
  o.require(worst <= 1e-10, "max rel error " + fmt(worst));
  if (o.pass) o.note = "max rel error " + fmt(worst);
  return o;
}

Outcome c3() {
  Outcome o;
  double worst = 0.0;
  for (int n = 3; n <= 8; ++n) {
    const double a = 0.5 * (n - 1);
    const double v = integrate_abs_jacobi({a, a, 1}, 0.5 * (n - 3), 1e-13).value;
    worst = std::max(worst, std::abs(v / ((n + 1.0) / (n - 1.0)) - 1.0));
  }
  o.require(worst <= 1e-11, "max rel error " + fmt(worst));
  if (o.pass) o.note = "max rel error " + fmt(worst);
  return o;
}

Outcome c4() {
  Outcome o;
  double worst = 0.0;
  for (Family f : kFamilies) {
    for (int n = 2; n <= 6; ++n) {
      for (int d = 0; d <= 30; ++d) {
        const SpaceId s{f, n, d};
        const double dim = static_cast<double>(dim_space(s));
        worst = std::max({worst, std::abs(kernel_axial_sum(s, 1.0) / dim - 1.0),
                          std::abs(kernel_axial_closed(s, 1.0) / dim - 1.0)});
      }
    }
  }
  o.require(worst <= 1e-10, "max rel error " + fmt(worst));
  if (o.pass) o.note = "max rel error " + fmt(worst);
  return o;
}

Outcome c5() {
  Outcome o;
  double worst = 0.0;
  for (Family f : kFamilies) {
    for (int n = 2; n <= 6; ++n) {
      for (int d = 0; d <= 30; ++d) {
        const SpaceId s{f, n, d};
        worst = std::max(worst, std::abs(kernel_l2_norm(s).value / std::sqrt(static_cast<double>(dim_space(s))) - 1.0));
      }
    }
  }
  o.require(worst <= 1e-8, "max rel error " + fmt(worst));
  if (o.pass) o.note = "max rel error " + fmt(worst);
  return o;
}

Outcome c6() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (Family f : kFamilies) {
    for (int n = 3; n <= 6; ++n) {
      for (int d = 0; d <= 30; ++d) {
        const SpaceId s{f, n, d};
        const ClosedKernel k(s);
        const double dim = static_cast<double>(dim_space(s));
        for (int i = 0; i < 1000; ++i) {
          const double t = unit(rng);
          worst = std::max(worst, std::abs(kernel_axial_sum(s, t) - k(t)) / dim);
        }
      }
    }
  }
  o.require(worst <= 1e-9, "max error/dim " + fmt(worst));
  if (o.pass) o.note = "max error/dim " + fmt(worst);
  return o;
}

Outcome c7() {
  Outcome o;
  double worst = 0.0;
  for (Family f : kFamilies) {
    for (int n = 2; n <= 4; ++n) {
      for (int d = 0; d <= 5; ++d) {
        const SpaceId s{f, n, d};
        const GramBasis basis = gram_basis(s);
        const double dim = static_cast<double>(dim_space(s));
        o.require(basis.size() == dim_space(s), "cardinality mismatch at " + to_string(s));
        for (int k = 0; k < 50; ++k) {
          const double t = -1.0 + 2.0 * k / 49.0;
          const double b = kernel_bruteforce(basis, t);
          worst = std::max({worst, std::abs(b - kernel_axial_sum(s, t)) / dim,
                            std::abs(b - kernel_axial_closed(s, t)) / dim});
        }
      }
    }
  }
  o.require(worst <= 1e-8, "max error/dim " + fmt(worst));
  if (o.pass) o.note = "max error/dim " + fmt(worst) + ", all cardinalities exact";
  return o;
}

Outcome c8() {
  Outcome o;
  // Exact piecewise integral: the kernel is (5/2)(3t^2 - 1) with roots at
  // +-1/sqrt(3); each of the four pieces of |3t^2 - 1| contributes r - r^3.
  const double r = 1.0 / std::sqrt(3.0);
  const double exact = 0.5 * 2.5 * 4.0 * (r - r * r * r);
  const double got = lambda_harmonic(3, 2).value;
  const double rel = std::abs(got / exact - 1.0);
  o.require(std::abs(exact / (10.0 * std::sqrt(3.0) / 9.0) - 1.0) < 1e-15, "oracle disagrees with 10 sqrt(3)/9");
  o.require(rel <= 1e-10, "rel error " + fmt(rel));
  if (o.pass) o.note = "value " + fmt(got) + ", rel error " + fmt(rel);
  return o;
}

Outcome c9() {
  Outcome o;
  double worst = 0.0;
  for (int d = 0; d <= 40; ++d) {
    worst = std::max(worst, std::abs(lambda_poly_leq(3, d).value / lambda_poly_leq_sphere2(d).value - 1.0));
  }
  o.require(worst <= 1e-10, "max rel error " + fmt(worst));
  if (o.pass) o.note = "max rel error " + fmt(worst);
  return o;
}

Outcome c10() {
  Outcome o;
  // d = 1 by hand: (1/pi) int_0^pi |1 + 2cos t| dt = 1/3 + 2 sqrt(3)/pi.
  const double exact = static_cast<double>(
      (ref::gl_integrate([](ref::real t) { return 1 + 2 * std::cos(t); }, 0, 2 * std::numbers::pi_v<ref::real> / 3) -
       ref::gl_integrate([](ref::real t) { return 1 + 2 * std::cos(t); }, 2 * std::numbers::pi_v<ref::real> / 3,
                         std::numbers::pi_v<ref::real>)) /
      std::numbers::pi_v<ref::real>);
  o.require(std::abs(exact / (1.0 / 3.0 + 2.0 * std::sqrt(3.0) / kPi) - 1.0) < 1e-15, "oracle mismatch");
  const double rel = std::abs(lambda_poly_leq(2, 1).value / exact - 1.0);
  o.require(rel <= 1e-11, "d=1 rel error " + fmt(rel));
  const double diff = lambda_poly_leq(2, 10000).value - lambda_poly_leq(2, 1000).value;
  const double target = 4.0 / (kPi * kPi) * std::log(10.0);
  const double drel = std::abs(diff / target - 1.0);
  o.require(drel <= 0.01, "log difference off by " + fmt(drel));
  if (o.pass) o.note = "d=1 rel error " + fmt(rel) + ", log difference rel error " + fmt(drel);
  return o;
}

Outcome c11() {
  Outcome o;
  const auto dev = [](Family f, int n, int d, double limit) {
    return std::abs(lambda({f, n, d}).value / std::pow(static_cast<double>(d), 0.5 * (n - 2)) / limit - 1.0);
  };
  const double g34 = std::tgamma(0.75);
  const double h_lim = 8.0 * g34 * g34 / (kPi * kPi);
  const double p_lim = 2.0 * std::sqrt(2.0 / kPi);
  const double h2000 = dev(Family::Harmonic, 3, 2000, h_lim), h200 = dev(Family::Harmonic, 3, 200, h_lim);
  const double p2000 = dev(Family::PolyLeq, 3, 2000, p_lim), p200 = dev(Family::PolyLeq, 3, 200, p_lim);
  const double q2000 = dev(Family::Homogeneous, 4, 2000, 2.0 / kPi);
  o.require(h2000 <= 0.02 && h2000 < h200, "harmonic n=3: " + fmt(h200) + " -> " + fmt(h2000));
  o.require(p2000 <= 0.02 && p2000 < p200, "polyleq n=3: " + fmt(p200) + " -> " + fmt(p2000));
  o.require(q2000 <= 0.05, "homogeneous n=4: " + fmt(q2000));
  if (o.pass) {
    o.note = "H n=3 " + fmt(h200) + "->" + fmt(h2000) + ", P<=d n=3 " + fmt(p200) + "->" + fmt(p2000) +
             ", P_d n=4 " + fmt(q2000);
  }
  return o;
}

Outcome c12() {
  Outcome o;
  double worst_lim = 0.0, worst_excess = -1.0;
  for (int n = 2; n <= 6; ++n) {
    const double cap = std::ldexp(1.0, n - 1);
    worst_lim = std::max(worst_lim, std::abs(lambda_complex_homogeneous(n, 1000000).value - cap) / cap);
    for (int d = 0; d <= 2000; ++d) {
      worst_excess = std::max(worst_excess, lambda_complex_homogeneous(n, d).value - cap);
    }
    for (int d = 2000; d <= 2000000; d = d * 3 / 2) {
      worst_excess = std::max(worst_excess, lambda_complex_homogeneous(n, d).value - cap);
    }
  }
  o.require(worst_lim < 1e-3, "limit rel deviation " + fmt(worst_lim));
  o.require(worst_excess <= 0.0, "bound exceeded by " + fmt(worst_excess));
  if (o.pass) o.note = "limit rel deviation " + fmt(worst_lim) + ", bound respected";
  return o;
}

Outcome c13() {
  Outcome o;
  const ClosedKernel k({Family::Harmonic, 3, 2});
  const auto mc = montecarlo_sphere(3, [&](std::span<const double> x) { return std::abs(k(x[0])); }, 1000000,
                                    kDefaultSeed);
  const double exact = 10.0 * std::sqrt(3.0) / 9.0;
  const double z = std::abs(mc.estimate - exact) / mc.std_error;
  o.require(z < 4.0, "deviation " + fmt(z) + " standard errors");
  if (o.pass) o.note = "estimate " + fmt(mc.estimate) + ", " + fmt(z) + " standard errors";
  return o;
}

Outcome c14() {
  Outcome o;
  long checked = 0;
  for (int n = 2; n <= 12; ++n) {
    for (int d = 0; d <= 60; ++d) {
      const auto hom = dim_space({Family::Homogeneous, n, d});
      if (d >= 2) {
        o.require(hom == dim_space({Family::Harmonic, n, d}) + dim_space({Family::Homogeneous, n, d - 2}),
                  "homogeneous split fails at n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
      std::uint64_t total = 0;
      for (int k = 0; k <= d; ++k) total += dim_space({Family::Harmonic, n, k});
      o.require(dim_space({Family::PolyLeq, n, d}) == total,
                "graded sum fails at n=" + std::to_string(n) + " d=" + std::to_string(d));
      o.require(dim_space({Family::Harmonic, n, d}) == ref::dim_harmonic(n, d), "closed formula mismatch");
      ++checked;
    }
  }
  if (o.pass) o.note = std::to_string(checked) + " (n, d) pairs exact";
  return o;
}

std::string capture(const std::string& cmd, int& status) {
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int st = pclose(pipe);
  status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

Outcome c15() {
  Outcome o;
  const std::string cmd = std::string(PROJCONST_CLI) + " verify --seed 42";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  o.require(s1 == 0 && s2 == 0, "verify exit codes " + std::to_string(s1) + ", " + std::to_string(s2));
  o.require(!a.empty() && a == b, "reports differ");
  if (o.pass) o.note = std::to_string(a.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c15};
  int failed = 0;
  int id = 1;
  for (const auto& run : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %2d: %s\n", o.pass ? "PASS" : "FAIL", id, o.note.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
    ++id;
  }
  std::printf("%d of 15 criteria passed\n", 15 - failed);
  return failed == 0 ? 0 : 1;
}
