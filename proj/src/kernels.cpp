#include "fastcon/kernels.hpp"

#include <atomic>
#include <cmath>

#include "fastcon/errors.hpp"

namespace fastcon::kernels {

namespace scalar {

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rotate_pair(double* x, double* y, double c, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sum_sq(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

}  // namespace scalar

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

std::atomic<Backend> g_backend{avx2_supported() ? Backend::avx2
                                                : Backend::scalar};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported()) {
    throw InvalidOptions("avx2 backend requested but not supported by CPU");
  }
  g_backend.store(b, std::memory_order_relaxed);
}

#if defined(__x86_64__) || defined(_M_X64)
#define FASTCON_DISPATCH(fn, ...)                    \
  do {                                               \
    if (active_backend() == Backend::avx2)           \
      return avx2::fn(__VA_ARGS__);                  \
    return scalar::fn(__VA_ARGS__);                  \
  } while (0)
#else
#define FASTCON_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void axpy(double a, const double* x, double* y, std::size_t n) {
  FASTCON_DISPATCH(axpy, a, x, y, n);
}

void scale(double a, double* x, std::size_t n) {
  FASTCON_DISPATCH(scale, a, x, n);
}

void rotate_pair(double* x, double* y, double c, double s, std::size_t n) {
  FASTCON_DISPATCH(rotate_pair, x, y, c, s, n);
}

double dot(const double* x, const double* y, std::size_t n) {
  FASTCON_DISPATCH(dot, x, y, n);
}

double sum_sq(const double* x, std::size_t n) {
  FASTCON_DISPATCH(sum_sq, x, n);
}

double max_abs(const double* x, std::size_t n) {
  FASTCON_DISPATCH(max_abs, x, n);
}

#undef FASTCON_DISPATCH

}  // namespace fastcon::kernels
