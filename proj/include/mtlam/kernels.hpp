#pragma once

#include <string>
#include <vector>

namespace mtlam::kernels {

// Inner-loop primitives behind every tensor op. One scalar reference
// implementation plus SIMD variants (AVX2 on x86-64, NEON on aarch64)
// selected once at runtime. Reductions accumulate in double; elementwise
// kernels stay in float. The variants are equivalence-tested against the
// scalar reference in tests/test_kernels.cpp.
struct Kernels {
  const char* name;

  double (*dot)(const float* a, const float* b, int n);
  double (*sum)(const float* x, int n);
  double (*sumsq)(const float* x, int n);

  // y[i] += a * x[i]
  void (*axpy)(float a, const float* x, float* y, int n);
  // acc[i] += a * x[i], double accumulator (matmul/conv forward rows)
  void (*daxpy)(double a, const float* x, double* acc, int n);

  void (*add)(const float* a, const float* b, float* y, int n);
  // y[i] = s * x[i] + t
  void (*affine)(const float* x, float s, float t, float* y, int n);
  void (*relu)(const float* x, float* y, int n);
  // gx[i] += gy[i] * (x[i] > 0)
  void (*relu_bwd)(const float* x, const float* gy, float* gx, int n);
};

const Kernels& scalar_kernels();

// Backends compiled for this target; always contains the scalar reference.
std::vector<const Kernels*> available_kernels();

// Dispatched backend. Honors MTLAM_KERNELS=scalar|avx2|neon|auto (default
// auto: widest available). Resolved once; throws ConfigError for an
// unknown or unavailable name.
const Kernels& active_kernels();

}  // namespace mtlam::kernels
