#pragma once

#include <cstddef>

// Low-level array kernels behind the dense linear algebra and the
// simulation loops. Every kernel has a scalar reference implementation and,
// on x86-64, an AVX2 variant selected at runtime. The elementwise kernels
// (axpy, rotate_pair, scale) round identically per element, so scalar and
// AVX2 results match bit for bit; the reductions (dot, sum_sq, max_abs)
// reassociate and are equivalence-tested to rounding error instead.
namespace fastcon::kernels {

enum class Backend { scalar, avx2 };

bool avx2_supported();
Backend active_backend();

// Select the backend used by the dispatching entry points below.
// Throws InvalidOptions when the requested backend is unavailable.
void set_backend(Backend b);

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

// x[i] *= a
void scale(double a, double* x, std::size_t n);

// (x[i], y[i]) <- (c*x[i] - s*y[i], s*x[i] + c*y[i]); the plane rotation
// applied to row pairs inside the Jacobi eigensolver.
void rotate_pair(double* x, double* y, double c, double s, std::size_t n);

double dot(const double* x, const double* y, std::size_t n);

double sum_sq(const double* x, std::size_t n);

double max_abs(const double* x, std::size_t n);

namespace scalar {
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void rotate_pair(double* x, double* y, double c, double s, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void rotate_pair(double* x, double* y, double c, double s, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace fastcon::kernels
