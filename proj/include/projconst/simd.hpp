#pragma once

#include <span>

namespace projconst::simd {

enum class Isa { Scalar, Avx2 };

/// Best instruction set supported by this CPU and compiled into the library.
Isa detected_isa();

/// The kernel set used by jacobi_batch. Equals detected_isa() unless the
/// environment variable PROJCONST_SIMD=scalar forces the scalar kernels.
Isa active_isa();

const char* isa_name(Isa isa);

/// Coefficients of the recurrence
///   P_{k+1}(t) = (a[k] t + b[k]) P_k(t) - c[k] P_{k-1}(t),  P_0 = 1, P_{-1} = 0,
/// for k = 0 .. degree-1. All three spans have length degree.
struct RecurrenceView {
  std::span<const double> a;
  std::span<const double> b;
  std::span<const double> c;
};

/// out[i] = P_degree(t[i]). Both kernels perform the same sequence of IEEE
/// operations, so their results are bitwise identical.
void jacobi_batch_scalar(RecurrenceView rec, std::span<const double> t, std::span<double> out);

#if defined(PROJCONST_HAVE_AVX2)
void jacobi_batch_avx2(RecurrenceView rec, std::span<const double> t, std::span<double> out);
#endif

void jacobi_batch(RecurrenceView rec, std::span<const double> t, std::span<double> out);

}  // namespace projconst::simd
