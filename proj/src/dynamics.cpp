#include "fastcon/dynamics.hpp"

#include <string>

#include "fastcon/binomial.hpp"
#include "fastcon/errors.hpp"
#include "fastcon/kernels.hpp"

namespace fastcon {

void validate(const SystemConfig& cfg) {
  if (cfg.order < 1) throw InvalidOptions("system order must be >= 1");
  if (!(cfg.tau > 0.0)) throw InvalidOptions("sampling period must be > 0");
}

std::pair<Matrix, std::vector<double>> system_matrices(const SystemConfig& cfg) {
  validate(cfg);
  const int n = cfg.order;
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    if (i + 1 < n) a(i, i + 1) = cfg.tau;
  }
  std::vector<double> b(n, 0.0);
  b[n - 1] = cfg.tau;
  return {a, b};
}

Matrix closed_loop_block(const SystemConfig& cfg, double lambda,
                         const GainVector& k) {
  auto [a, b] = system_matrices(cfg);
  if (k.size() != static_cast<std::size_t>(cfg.order)) {
    throw DimensionMismatch("gain vector length " + std::to_string(k.size()) +
                            " != order " + std::to_string(cfg.order));
  }
  if (lambda == 0.0) return a;
  // B has a single nonzero entry, so only the last row changes.
  const int n = cfg.order;
  for (int j = 0; j < n; ++j) a(n - 1, j) -= lambda * b[n - 1] * k[j];
  return a;
}

Matrix a_power(const SystemConfig& cfg, std::int64_t k) {
  validate(cfg);
  if (k < 0) throw InvalidOptions("a_power needs k >= 0");
  const int n = cfg.order;
  Matrix m(n, n);
  // Powers of tau shared along diagonals.
  std::vector<double> tau_pow(n, 1.0);
  for (int d = 1; d < n; ++d) tau_pow[d] = tau_pow[d - 1] * cfg.tau;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m(i, j) = binomial(k, j - i) * tau_pow[j - i];
    }
  }
  return m;
}

namespace {

std::vector<double> blockwise_step(const SystemConfig& cfg,
                                   const std::vector<double>& x,
                                   const std::vector<double>& coupling) {
  const int n = cfg.order;
  const std::size_t agents = coupling.size();
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < agents; ++i) {
    const double* xi = &x[i * n];
    double* oi = &out[i * n];
    for (int l = 0; l + 1 < n; ++l) oi[l] = xi[l] + cfg.tau * xi[l + 1];
    oi[n - 1] = xi[n - 1] - cfg.tau * coupling[i];
  }
  return out;
}

void check_step_dims(int node_count, const SystemConfig& cfg,
                     const GainVector& k, const std::vector<double>& x) {
  validate(cfg);
  if (k.size() != static_cast<std::size_t>(cfg.order)) {
    throw DimensionMismatch("gain vector length != order");
  }
  if (x.size() != static_cast<std::size_t>(node_count) * cfg.order) {
    throw DimensionMismatch("state length " + std::to_string(x.size()) +
                            " != N*n = " +
                            std::to_string(std::size_t(node_count) * cfg.order));
  }
}

}  // namespace

std::vector<double> network_step(const Graph& g, const SystemConfig& cfg,
                                 const GainVector& k,
                                 const std::vector<double>& x) {
  check_step_dims(g.node_count, cfg, k, x);
  const int n = cfg.order;
  const int big_n = g.node_count;
  // y_j = K x_j, then z = L y through the edge list.
  std::vector<double> y(big_n);
  for (int j = 0; j < big_n; ++j) {
    y[j] = kernels::dot(k.data(), &x[static_cast<std::size_t>(j) * n], n);
  }
  std::vector<double> z(big_n, 0.0);
  for (const Edge& e : g.edges) {
    z[e.i] += e.weight * (y[e.i] - y[e.j]);
    z[e.j] += e.weight * (y[e.j] - y[e.i]);
  }
  return blockwise_step(cfg, x, z);
}

std::vector<double> network_step(const Matrix& laplacian,
                                 const SystemConfig& cfg, const GainVector& k,
                                 const std::vector<double>& x) {
  if (laplacian.rows() != laplacian.cols()) {
    throw DimensionMismatch("laplacian must be square");
  }
  check_step_dims(laplacian.rows(), cfg, k, x);
  const int n = cfg.order;
  const int big_n = laplacian.rows();
  std::vector<double> y(big_n);
  for (int j = 0; j < big_n; ++j) {
    y[j] = kernels::dot(k.data(), &x[static_cast<std::size_t>(j) * n], n);
  }
  const std::vector<double> z = laplacian * y;
  return blockwise_step(cfg, x, z);
}

}  // namespace fastcon
