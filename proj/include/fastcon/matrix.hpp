#pragma once

#include <vector>

#include "fastcon/errors.hpp"

namespace fastcon {

// Dense row-major matrix of doubles. Everything in this project is either
// an n x n agent block (n small) or an N x N Laplacian (N at most a few
// hundred), so one dense type covers all of it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double value = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, value) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix size");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  double* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
  const double* row(int i) const {
    return data_.data() + static_cast<std::size_t>(i) * cols_;
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix transpose(const Matrix& a);

// max_ij |a_ij|
double max_abs_norm(const Matrix& a);
double frobenius_norm(const Matrix& a);

}  // namespace fastcon
