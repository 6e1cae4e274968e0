// AVX2 variants of the array kernels. Compiled with function-level target
// attributes so the rest of the library stays plain x86-64; the dispatcher
// in kernels.cpp only routes here after a runtime CPU check.
//
// The elementwise kernels use mul/add (no FMA) so each lane performs the
// same two roundings as the scalar reference and the results are
// bit-identical. The reductions keep four partial accumulators and fold
// them at the end, which reassociates the sum; tests compare those against
// the scalar reference with a small relative tolerance.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "fastcon/kernels.hpp"

namespace fastcon::kernels::avx2 {

#define FASTCON_AVX2 __attribute__((target("avx2")))

FASTCON_AVX2 void axpy(double a, const double* x, double* y, std::size_t n) {
  const std::size_t main = n & ~std::size_t{3};
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i < main; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_add_pd(vy, _mm256_mul_pd(va, vx));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

FASTCON_AVX2 void scale(double a, double* x, std::size_t n) {
  const std::size_t main = n & ~std::size_t{3};
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i < main; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

FASTCON_AVX2 void rotate_pair(double* x, double* y, double c, double s,
                              std::size_t n) {
  const std::size_t main = n & ~std::size_t{3};
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i < main; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    __m256d vy = _mm256_loadu_pd(y + i);
    __m256d nx = _mm256_sub_pd(_mm256_mul_pd(vc, vx), _mm256_mul_pd(vs, vy));
    __m256d ny = _mm256_add_pd(_mm256_mul_pd(vs, vx), _mm256_mul_pd(vc, vy));
    _mm256_storeu_pd(x + i, nx);
    _mm256_storeu_pd(y + i, ny);
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

FASTCON_AVX2 static double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

FASTCON_AVX2 double dot(const double* x, const double* y, std::size_t n) {
  const std::size_t main = n & ~std::size_t{3};
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < main; i += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  double result = hsum(acc);
  for (; i < n; ++i) result += x[i] * y[i];
  return result;
}

FASTCON_AVX2 double sum_sq(const double* x, std::size_t n) {
  const std::size_t main = n & ~std::size_t{3};
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < main; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(vx, vx));
  }
  double result = hsum(acc);
  for (; i < n; ++i) result += x[i] * x[i];
  return result;
}

FASTCON_AVX2 double max_abs(const double* x, std::size_t n) {
  const std::size_t main = n & ~std::size_t{3};
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < main; i += 4) {
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x + i)));
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  lo = _mm_max_pd(lo, hi);
  double result = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < n; ++i) result = std::max(result, std::fabs(x[i]));
  return result;
}

#undef FASTCON_AVX2

}  // namespace fastcon::kernels::avx2

#endif  // x86-64
