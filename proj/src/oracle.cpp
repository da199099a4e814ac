#include "projconst/oracle.hpp"

#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "projconst/errors.hpp"

namespace projconst {
namespace {

void multi_indices(int n, int degree, std::vector<int>& current, int pos,
                   std::vector<std::vector<int>>& out) {
  if (pos == n - 1) {
    current[pos] = degree;
    out.push_back(current);
    return;
  }
  for (int k = degree; k >= 0; --k) {
    current[pos] = k;
    multi_indices(n, degree - k, current, pos + 1, out);
  }
}

std::vector<std::vector<int>> monomials_of_degree(int n, int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 0) return out;
  std::vector<int> current(n, 0);
  multi_indices(n, degree, current, 0, out);
  return out;
}

mpq_class pair_moment(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  return monomial_moment_exact(sum);
}

double monomial_value(const std::vector<int>& exps, std::span<const double> x) {
  double v = 1.0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    for (int k = 0; k < exps[i]; ++k) v *= x[i];
  }
  return v;
}

GramBasis build_gram_basis(const SpaceId& space) {
  const int n = space.n;
  const int d = space.d;
  // Spanning set, in orthogonalization order, and the index where the
  // kept block starts.
  std::vector<std::vector<int>> span_set;
  std::size_t kept_from = 0;
  bool complement = false;
  switch (space.family) {
    case Family::Homogeneous:
      span_set = monomials_of_degree(n, d);
      break;
    case Family::PolyLeq:
      span_set = monomials_of_degree(n, d);
      for (auto& m : monomials_of_degree(n, d - 1)) span_set.push_back(m);
      break;
    case Family::Harmonic:
      // On the sphere |x|^2 P_{d-2} = P_{d-2}, so the harmonic part of P_d is
      // what remains of the degree-d monomials after removing P_{d-2}.
      span_set = monomials_of_degree(n, d - 2);
      kept_from = span_set.size();
      for (auto& m : monomials_of_degree(n, d)) span_set.push_back(m);
      complement = true;
      break;
  }

  const std::size_t k = span_set.size();
  std::vector<std::vector<mpq_class>> gram(k, std::vector<mpq_class>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      gram[i][j] = pair_moment(span_set[i], span_set[j]);
      gram[j][i] = gram[i][j];
    }
  }

  // Classical Gram-Schmidt in coefficient space; exact, so a zero norm means
  // exact linear dependence on the sphere.
  std::vector<std::vector<mpq_class>> coeffs;
  std::vector<mpq_class> norms;
  std::vector<std::size_t> origin;
  for (std::size_t idx = 0; idx < k; ++idx) {
    std::vector<mpq_class> c(k);
    c[idx] = 1;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      mpq_class inner = 0;
      for (std::size_t l = 0; l < k; ++l) {
        if (coeffs[j][l] != 0) inner += coeffs[j][l] * gram[idx][l];
      }
      if (inner == 0) continue;
      const mpq_class proj = inner / norms[j];
      for (std::size_t l = 0; l < k; ++l) {
        if (coeffs[j][l] != 0) c[l] -= proj * coeffs[j][l];
      }
    }
    mpq_class norm = 0;
    for (std::size_t l = 0; l < k; ++l) {
      if (c[l] != 0) norm += c[l] * gram[idx][l];
    }
    if (norm == 0) {
      if (complement && idx >= kept_from) continue;
      throw DomainError("gram_basis: spanning set is rank deficient at monomial " +
                        std::to_string(idx) + " of " + to_string(space));
    }
    coeffs.push_back(std::move(c));
    norms.push_back(norm);
    origin.push_back(idx);
  }

  GramBasis basis{space, span_set, {}};
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (origin[j] < kept_from) continue;
    const double scale = 1.0 / std::sqrt(norms[j].get_d());
    std::vector<double> row(k);
    for (std::size_t l = 0; l < k; ++l) row[l] = coeffs[j][l].get_d() * scale;
    basis.coefficients.push_back(std::move(row));
  }
  return basis;
}

}  // namespace

double GramBasis::evaluate(std::size_t row, std::span<const double> x) const {
  double v = 0.0;
  const auto& c = coefficients.at(row);
  for (std::size_t l = 0; l < monomials.size(); ++l) {
    if (c[l] != 0.0) v += c[l] * monomial_value(monomials[l], x);
  }
  return v;
}

GramBasis gram_basis(const SpaceId& space) {
  validate(space);
  if (space.n > 4 || space.d > 6) {
    throw UnsupportedError("gram_basis: oracle scale is n <= 4, d <= 6; got " + to_string(space));
  }
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, GramBasis> cache;
  const auto key = std::make_tuple(static_cast<int>(space.family), space.n, space.d);
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  return cache.emplace(key, build_gram_basis(space)).first->second;
}

std::vector<double> basis_gram_matrix(const GramBasis& basis) {
  const std::size_t k = basis.monomials.size();
  std::vector<double> g(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      g[i * k + j] = pair_moment(basis.monomials[i], basis.monomials[j]).get_d();
      g[j * k + i] = g[i * k + j];
    }
  }
  const std::size_t m = basis.size();
  std::vector<double> out(m * m, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      double acc = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        const double ci = basis.coefficients[r][i];
        if (ci == 0.0) continue;
        for (std::size_t j = 0; j < k; ++j) acc += ci * g[i * k + j] * basis.coefficients[s][j];
      }
      out[r * m + s] = acc;
    }
  }
  return out;
}

double kernel_bruteforce(const GramBasis& basis, double t) {
  const int n = basis.space.n;
  std::vector<double> x(n, 0.0);
  std::vector<double> y(n, 0.0);
  x[0] = 1.0;
  y[0] = t;
  y[1] = std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
  double k = 0.0;
  for (std::size_t r = 0; r < basis.size(); ++r) k += basis.evaluate(r, x) * basis.evaluate(r, y);
  return k;
}

double kernel_bruteforce(const SpaceId& space, double t) {
  return kernel_bruteforce(gram_basis(space), t);
}

namespace {

constexpr long kChunkSize = 1 << 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct RunningStats {
  long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void merge(const RunningStats& o) {
    if (o.count == 0) return;
    const long total = count + o.count;
    const double delta = o.mean - mean;
    mean += delta * (static_cast<double>(o.count) / total);
    m2 += o.m2 + delta * delta * (static_cast<double>(count) * o.count / total);
    count = total;
  }
};

RunningStats sample_chunk(int n, const SphereFunction& f, long count, std::uint64_t chunk_seed) {
  std::mt19937_64 engine(chunk_seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(n);
  RunningStats stats;
  for (long s = 0; s < count; ++s) {
    double norm_sq = 0.0;
    do {
      norm_sq = 0.0;
      for (double& xi : x) {
        xi = normal(engine);
        norm_sq += xi * xi;
      }
    } while (norm_sq == 0.0);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& xi : x) xi *= inv;
    stats.add(f(x));
  }
  return stats;
}

}  // namespace

MonteCarloEstimate montecarlo_sphere(int n, const SphereFunction& f, long samples,
                                     std::uint64_t seed) {
  if (n < 2) throw DomainError("montecarlo_sphere: n must be at least 2");
  if (samples < 1000) throw DomainError("montecarlo_sphere: need at least 1000 samples");

  const long chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<RunningStats> partial(chunks);
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(chunks)));
  auto run_range = [&](long first, long step) {
    for (long c = first; c < chunks; c += step) {
      const long count = std::min(kChunkSize, samples - c * kChunkSize);
      partial[c] = sample_chunk(n, f, count, splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(c))));
    }
  };
  if (workers == 1) {
    run_range(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, run_range, static_cast<long>(w),
                                static_cast<long>(workers)));
    }
    for (auto& j : jobs) j.get();
  }

  RunningStats total;
  for (const RunningStats& p : partial) total.merge(p);
  const double variance = total.count > 1 ? total.m2 / (total.count - 1) : 0.0;
  return {total.mean, std::sqrt(variance / total.count)};
}

}  // namespace projconst
