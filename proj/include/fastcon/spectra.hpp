#pragma once

#include <vector>

#include "fastcon/graph.hpp"
#include "fastcon/matrix.hpp"

namespace fastcon {

struct JacobiOptions {
  // Sweep until the off-diagonal Frobenius norm drops below
  // tol * max(1, max_abs_norm(input)).
  double tol = 1e-12;
  int max_sweeps = 100;
};

// Two eigenvalues belong to the same cluster when they differ by at most
// distinct_cluster_tol * max(1, lambda_N); a graph counts as connected when
// lambda_2 exceeds connectivity_tol * max(1, lambda_N).
inline constexpr double kDistinctClusterTol = 1e-8;
inline constexpr double kConnectivityTol = 1e-9;

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column i pairs with values[i]
};

// Cyclic Jacobi rotations for a symmetric matrix. Throws NonConvergence when
// the sweep budget runs out and DimensionMismatch for non-square input.
EigenSystem jacobi_eigensystem(Matrix a, const JacobiOptions& opts = {});

struct Spectrum {
  std::vector<double> eigenvalues;       // ascending, eigenvalues[0] ~ 0
  Matrix eigenvectors;                   // orthonormal, column-paired
  std::vector<double> distinct_nonzero;  // strictly descending cluster means
  std::vector<int> multiplicities;       // aligned with distinct_nonzero
  bool connected = false;

  double lambda2() const { return eigenvalues[1]; }
  double lambda_n() const { return eigenvalues.back(); }
  int distinct_count() const { return static_cast<int>(distinct_nonzero.size()); }
};

Spectrum spectrum(const Graph& g, const JacobiOptions& opts = {});

// lambda_N / lambda_2; throws Disconnected when lambda_2 sits below the
// connectivity threshold.
double eigenratio(const Spectrum& s);

}  // namespace fastcon
