#include "projconst/orthopoly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>

#include "projconst/errors.hpp"
#include "projconst/gamma.hpp"
#include "projconst/simd.hpp"

namespace projconst {

void validate(const JacobiParams& params) {
  if (!(params.alpha > -1.0) || !(params.beta > -1.0)) {
    throw DomainError("Jacobi parameters must satisfy alpha, beta > -1");
  }
  if (params.degree < 0) throw DomainError("Jacobi degree must be non-negative");
}

JacobiRecurrence::JacobiRecurrence(const JacobiParams& params) : params_(params) {
  validate(params);
  const int d = params.degree;
  const double al = params.alpha;
  const double be = params.beta;
  a_.resize(d);
  b_.resize(d);
  c_.resize(d);
  if (d == 0) return;
  a_[0] = 0.5 * (al + be + 2.0);
  b_[0] = 0.5 * (al - be);
  c_[0] = 0.0;
  const double diff_sq = (al - be) * (al + be);
  for (int k = 1; k < d; ++k) {
    const double s = 2.0 * k + al + be;
    const double denom = 2.0 * (k + 1) * (k + al + be + 1.0) * s;
    a_[k] = (s + 1.0) * (s + 2.0) * s / denom;
    b_[k] = (s + 1.0) * diff_sq / denom;
    c_[k] = 2.0 * (k + al) * (k + be) * (s + 2.0) / denom;
  }
}

double JacobiRecurrence::operator()(double t) const {
  double prev = 0.0;
  double cur = 1.0;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    const double next = (a_[k] * t + b_[k]) * cur - c_[k] * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::pair<double, double> JacobiRecurrence::value_and_derivative(double t) const {
  double prev = 0.0, cur = 1.0;
  double dprev = 0.0, dcur = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    const double lin = a_[k] * t + b_[k];
    const double next = lin * cur - c_[k] * prev;
    const double dnext = a_[k] * cur + lin * dcur - c_[k] * dprev;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
  }
  return {cur, dcur};
}

void JacobiRecurrence::evaluate(std::span<const double> t, std::span<double> out) const {
  simd::jacobi_batch({a_, b_, c_}, t, out);
}

double clamp_unit(double t, const char* op) {
  constexpr double slack = 1e-12;
  if (std::abs(t) <= 1.0) return t;
  if (std::abs(t) <= 1.0 + slack) return std::copysign(1.0, t);
  throw DomainError(std::string(op) + ": argument " + std::to_string(t) + " outside [-1, 1]");
}

double jacobi_eval(const JacobiParams& params, double t) {
  t = clamp_unit(t, "jacobi_eval");
  return JacobiRecurrence(params)(t);
}

double jacobi_symmetry_check(const JacobiParams& params, double t) {
  t = clamp_unit(t, "jacobi_symmetry_check");
  const double lhs = JacobiRecurrence(params)(t);
  const JacobiParams swapped{params.beta, params.alpha, params.degree};
  const double sign = (params.degree % 2 == 0) ? 1.0 : -1.0;
  return lhs - sign * JacobiRecurrence(swapped)(-t);
}

namespace {

void require_gegenbauer_lambda(double lambda) {
  if (!(lambda > -0.5)) throw DomainError("Gegenbauer parameter must exceed -1/2");
  if (lambda == 0.0) throw DomainError("Gegenbauer parameter 0 is a pole of the scaling");
}

// ln|Gamma(x)| and its sign, for x > -1, x != 0.
std::pair<double, double> signed_log_gamma(double x) {
  if (x > 0.0) return {log_gamma(x), 1.0};
  return {log_gamma(x + 1.0) - std::log(-x), -1.0};
}

}  // namespace

double gegenbauer_eval(double lambda, int d, double t) {
  require_gegenbauer_lambda(lambda);
  if (d < 0) throw DomainError("Gegenbauer degree must be non-negative");
  t = clamp_unit(t, "gegenbauer_eval");
  // Gamma(2l+d)Gamma(l+1/2) / (Gamma(2l)Gamma(l+1/2+d)) = prod_i (2l+i)/(l+1/2+i)
  double scale = 1.0;
  for (int i = 0; i < d; ++i) scale *= (2.0 * lambda + i) / (lambda + 0.5 + i);
  return scale * JacobiRecurrence({lambda - 0.5, lambda - 0.5, d})(t);
}

double gegenbauer_norm_sq(double lambda, int d) {
  require_gegenbauer_lambda(lambda);
  if (d < 0) throw DomainError("Gegenbauer degree must be non-negative");
  const auto [lg_num, sign_num] = signed_log_gamma(d + 2.0 * lambda);
  const auto [lg_lam, sign_lam] = signed_log_gamma(lambda);
  (void)sign_lam;
  const double log_value = std::log(std::numbers::pi) + (1.0 - 2.0 * lambda) * std::numbers::ln2 +
                           lg_num - log_gamma(d + 1.0) - std::log(std::abs(d + lambda)) -
                           2.0 * lg_lam;
  const double sign = sign_num * ((d + lambda) > 0.0 ? 1.0 : -1.0);
  return sign * std::exp(log_value);
}

CoeffList legendre_nd_coeffs(int n, int d) {
  if (n < 2) throw DomainError("legendre_nd_coeffs: n must be at least 2");
  if (d < 0) throw DomainError("legendre_nd_coeffs: d must be non-negative");
  CoeffList out{n, d, {}};
  const int top = d / 2;
  out.coeffs.resize(top + 1);
  out.coeffs[0] = 1.0;
  for (int j = 1; j <= top; ++j) {
    const double num = static_cast<double>(d - 2 * j + 2) * static_cast<double>(d - 2 * j + 1);
    const double den = 2.0 * j * static_cast<double>(2 * j + n - 3);
    out.coeffs[j] = -num / den * out.coeffs[j - 1];
  }
  return out;
}

const CoeffList& legendre_nd_coeffs_cached(int n, int d) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, CoeffList> cache;
  const auto key = std::make_pair(n, d);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  CoeffList fresh = legendre_nd_coeffs(n, d);
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(fresh)).first->second;
}

namespace {

// sum_j b_j x^{J-j} y^j, homogeneous Horner in (x, y).
double homogeneous_horner(const std::vector<double>& b, double x, double y) {
  double acc = b[0];
  double ypow = 1.0;
  for (std::size_t j = 1; j < b.size(); ++j) {
    ypow *= y;
    acc = acc * x + b[j] * ypow;
  }
  return acc;
}

}  // namespace

double legendre_nd_eval(int n, int d, double t) {
  t = clamp_unit(t, "legendre_nd_eval");
  const CoeffList& cl = legendre_nd_coeffs_cached(n, d);
  const double u = (1.0 - t) * (1.0 + t);
  const double sum = homogeneous_horner(cl.coeffs, t * t, u);
  return (d % 2 == 0) ? sum : t * sum;
}

double legendre_harmonic_eval(int n, int d, std::span<const double> x) {
  if (static_cast<int>(x.size()) != n) {
    throw DomainError("legendre_harmonic_eval: point must have n coordinates");
  }
  const CoeffList& cl = legendre_nd_coeffs_cached(n, d);
  double tail_sq = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) tail_sq += x[i] * x[i];
  const double sum = homogeneous_horner(cl.coeffs, x[0] * x[0], tail_sq);
  return (d % 2 == 0) ? sum : x[0] * sum;
}

std::vector<double> jacobi_roots(const JacobiParams& params) {
  validate(params);
  const int d = params.degree;
  if (d < 1) throw DomainError("jacobi_roots: degree must be at least 1");
  const double al = params.alpha;
  const double be = params.beta;

  Eigen::VectorXd diag(d);
  Eigen::VectorXd sub(std::max(d - 1, 0));
  diag[0] = (be - al) / (al + be + 2.0);
  for (int k = 1; k < d; ++k) {
    const double s = 2.0 * k + al + be;
    diag[k] = (be - al) * (be + al) / (s * (s + 2.0));
  }
  for (int k = 1; k < d; ++k) {
    const double s = 2.0 * k + al + be;
    double sq;
    if (k == 1) {
      sq = 4.0 * (1.0 + al) * (1.0 + be) / (s * s * (s + 1.0));
    } else {
      sq = 4.0 * k * (k + al) * (k + be) * (k + al + be) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub[k - 1] = std::sqrt(sq);
  }

  std::vector<double> roots(d);
  if (d == 1) {
    roots[0] = diag[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("jacobi_roots: tridiagonal eigenvalue solver failed", -1);
    }
    for (int i = 0; i < d; ++i) roots[i] = solver.eigenvalues()[i];
  }

  const JacobiRecurrence poly(params);
  for (int i = 0; i < d; ++i) {
    const double start = roots[i];
    const double lo_gap = (i > 0) ? start - roots[i - 1] : start + 1.0;
    const double hi_gap = (i + 1 < d) ? roots[i + 1] - start : 1.0 - start;
    const double limit = 0.5 * std::min(lo_gap, hi_gap);
    double x = start;
    for (int iter = 0; iter < 4; ++iter) {
      const auto [p, dp] = poly.value_and_derivative(x);
      if (dp == 0.0 || !std::isfinite(p / dp)) break;
      const double step = p / dp;
      x -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) break;
    }
    if (!std::isfinite(x) || std::abs(x - start) > limit) {
      throw ConvergenceError("jacobi_roots: Newton polish diverged at root " + std::to_string(i), i);
    }
    roots[i] = x;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace projconst
