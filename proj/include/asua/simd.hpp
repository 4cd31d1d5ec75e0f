#pragma once

#include <cstddef>

namespace asua::simd {

/// Dense double-precision inner loops used by the floating-point solver.
/// Each instruction set provides the same table; `active()` picks one at
/// runtime. Variants agree with the scalar reference up to rounding order.
struct Kernels {
  const char* name;
  /// y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// max_i |x[i]|
  double (*max_abs)(const double* x, std::size_t n);
};

const Kernels& scalar();

/// nullptr when not compiled in or the CPU lacks AVX2+FMA.
const Kernels* avx2();

/// Best available table. Setting ASUA_SIMD=scalar in the environment forces
/// the scalar reference.
const Kernels& active();

}  // namespace asua::simd
