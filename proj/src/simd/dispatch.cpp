#include <cstdlib>
#include <string_view>

#include "projconst/simd.hpp"

namespace projconst::simd {

Isa detected_isa() {
#if defined(PROJCONST_HAVE_AVX2)
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  if (has_avx2) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* forced = std::getenv("PROJCONST_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return Isa::Scalar;
    return detected_isa();
  }();
  return isa;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Avx2:
      return "avx2";
    case Isa::Scalar:
      break;
  }
  return "scalar";
}

void jacobi_batch(RecurrenceView rec, std::span<const double> t, std::span<double> out) {
#if defined(PROJCONST_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    jacobi_batch_avx2(rec, t, out);
    return;
  }
#endif
  jacobi_batch_scalar(rec, t, out);
}

}  // namespace projconst::simd
