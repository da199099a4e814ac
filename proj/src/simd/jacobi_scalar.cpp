#include <cassert>
#include <cstddef>

#include "projconst/simd.hpp"

namespace projconst::simd {

void jacobi_batch_scalar(RecurrenceView rec, std::span<const double> t, std::span<double> out) {
  assert(t.size() == out.size());
  const std::size_t degree = rec.a.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double x = t[i];
    double prev = 0.0;
    double cur = 1.0;
    for (std::size_t k = 0; k < degree; ++k) {
      const double next = (rec.a[k] * x + rec.b[k]) * cur - rec.c[k] * prev;
      prev = cur;
      cur = next;
    }
    out[i] = cur;
  }
}

}  // namespace projconst::simd
