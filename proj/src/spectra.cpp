#include "fastcon/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fastcon/errors.hpp"
#include "fastcon/kernels.hpp"

namespace fastcon {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double acc = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) acc += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(acc);
}

}  // namespace

EigenSystem jacobi_eigensystem(Matrix a, const JacobiOptions& opts) {
  if (a.rows() != a.cols()) throw DimensionMismatch("jacobi needs square input");
  const int n = a.rows();
  const double scale = std::max(1.0, max_abs_norm(a));
  const double threshold = opts.tol * scale;
  // Rotations below this cannot move the off-diagonal norm past threshold.
  const double skip = threshold / (2.0 * n * n);

  // vt rows accumulate the transposed eigenvector matrix so the rotations
  // touch contiguous memory.
  Matrix vt = Matrix::identity(n);
  bool converged = false;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= skip) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // a <- J^T a J with J the (p,q) plane rotation.
        kernels::rotate_pair(a.row(p), a.row(q), c, s, n);
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        kernels::rotate_pair(vt.row(p), vt.row(q), c, s, n);
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > threshold) {
    throw NonConvergence("jacobi sweep budget exhausted");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x) < a(y, y); });

  EigenSystem es;
  es.values.resize(n);
  es.vectors = Matrix(n, n);
  for (int col = 0; col < n; ++col) {
    const int src = order[col];
    es.values[col] = a(src, src);
    for (int i = 0; i < n; ++i) es.vectors(i, col) = vt(src, i);
  }
  return es;
}

Spectrum spectrum(const Graph& g, const JacobiOptions& opts) {
  EigenSystem es = jacobi_eigensystem(laplacian(g), opts);
  Spectrum s;
  s.eigenvalues = std::move(es.values);
  s.eigenvectors = std::move(es.vectors);

  const int n = g.node_count;
  const double lambda_max = s.eigenvalues.back();
  const double cluster_tol = kDistinctClusterTol * std::max(1.0, lambda_max);
  s.connected =
      n == 1 || s.eigenvalues[1] > kConnectivityTol * std::max(1.0, lambda_max);

  // Chain-cluster the ascending eigenvalues; the cluster containing
  // lambda_1 = 0 is the zero cluster and is excluded from distinct_nonzero.
  int begin = 0;
  std::vector<std::pair<double, int>> clusters;  // (mean, multiplicity)
  for (int i = 1; i <= n; ++i) {
    if (i == n || s.eigenvalues[i] - s.eigenvalues[i - 1] > cluster_tol) {
      const int count = i - begin;
      double mean = 0.0;
      for (int k = begin; k < i; ++k) mean += s.eigenvalues[k];
      clusters.emplace_back(mean / count, count);
      begin = i;
    }
  }
  for (std::size_t c = clusters.size(); c-- > 1;) {
    s.distinct_nonzero.push_back(clusters[c].first);
    s.multiplicities.push_back(clusters[c].second);
  }
  return s;
}

double eigenratio(const Spectrum& s) {
  if (!s.connected) throw Disconnected("eigenratio needs a connected graph");
  if (s.eigenvalues.size() < 2) {
    throw InvalidOptions("eigenratio needs at least two nodes");
  }
  return s.lambda_n() / s.lambda2();
}

}  // namespace fastcon
