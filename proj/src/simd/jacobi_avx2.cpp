#include <immintrin.h>

#include <cassert>
#include <cstddef>

#include "projconst/simd.hpp"

namespace projconst::simd {

void jacobi_batch_avx2(RecurrenceView rec, std::span<const double> t, std::span<double> out) {
  assert(t.size() == out.size());
  const std::size_t degree = rec.a.size();
  const std::size_t n = t.size();
  std::size_t i = 0;

  // Two independent 4-lane chains per iteration hide the add/mul latency of
  // the serial recurrence.
  for (; i + 8 <= n; i += 8) {
    const __m256d x0 = _mm256_loadu_pd(t.data() + i);
    const __m256d x1 = _mm256_loadu_pd(t.data() + i + 4);
    __m256d prev0 = _mm256_setzero_pd();
    __m256d prev1 = _mm256_setzero_pd();
    __m256d cur0 = _mm256_set1_pd(1.0);
    __m256d cur1 = _mm256_set1_pd(1.0);
    for (std::size_t k = 0; k < degree; ++k) {
      const __m256d a = _mm256_set1_pd(rec.a[k]);
      const __m256d b = _mm256_set1_pd(rec.b[k]);
      const __m256d c = _mm256_set1_pd(rec.c[k]);
      const __m256d next0 = _mm256_sub_pd(
          _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(a, x0), b), cur0), _mm256_mul_pd(c, prev0));
      const __m256d next1 = _mm256_sub_pd(
          _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(a, x1), b), cur1), _mm256_mul_pd(c, prev1));
      prev0 = cur0;
      prev1 = cur1;
      cur0 = next0;
      cur1 = next1;
    }
    _mm256_storeu_pd(out.data() + i, cur0);
    _mm256_storeu_pd(out.data() + i + 4, cur1);
  }

  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(t.data() + i);
    __m256d prev = _mm256_setzero_pd();
    __m256d cur = _mm256_set1_pd(1.0);
    for (std::size_t k = 0; k < degree; ++k) {
      const __m256d a = _mm256_set1_pd(rec.a[k]);
      const __m256d b = _mm256_set1_pd(rec.b[k]);
      const __m256d c = _mm256_set1_pd(rec.c[k]);
      const __m256d next = _mm256_sub_pd(
          _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(a, x), b), cur), _mm256_mul_pd(c, prev));
      prev = cur;
      cur = next;
    }
    _mm256_storeu_pd(out.data() + i, cur);
  }

  if (i < n) {
    jacobi_batch_scalar(rec, t.subspan(i), out.subspan(i));
  }
}

}  // namespace projconst::simd
