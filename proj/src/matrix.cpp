#include "fastcon/matrix.hpp"

#include <cmath>

#include "fastcon/kernels.hpp"

namespace fastcon {

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
  Matrix c(a.rows(), b.cols());
  // Accumulate row_i(C) += a(i,k) * row_k(B); keeps the inner loop contiguous.
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik != 0.0) kernels::axpy(aik, b.row(k), c.row(i), b.cols());
    }
  }
  return c;
}

std::vector<double> operator*(const Matrix& a, const std::vector<double>& x) {
  if (static_cast<std::size_t>(a.cols()) != x.size()) {
    throw DimensionMismatch("matrix-vector shape");
  }
  std::vector<double> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    y[i] = kernels::dot(a.row(i), x.data(), x.size());
  }
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix sum shape");
  }
  Matrix c = a;
  kernels::axpy(1.0, b.data(), c.data(), c.size());
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix difference shape");
  }
  Matrix c = a;
  kernels::axpy(-1.0, b.data(), c.data(), c.size());
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c = a;
  kernels::scale(s, c.data(), c.size());
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

double max_abs_norm(const Matrix& a) {
  return kernels::max_abs(a.data(), a.size());
}

double frobenius_norm(const Matrix& a) {
  return std::sqrt(kernels::sum_sq(a.data(), a.size()));
}

}  // namespace fastcon
