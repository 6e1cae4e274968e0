#include "fastcon/finite_time.hpp"

#include <algorithm>
#include <cmath>

#include "fastcon/binomial.hpp"
#include "fastcon/errors.hpp"
#include "fastcon/stability.hpp"

namespace fastcon {

GainSchedule deadbeat_schedule(const Spectrum& s, const SystemConfig& cfg) {
  if (!s.connected) throw Disconnected("schedule needs a connected graph");
  validate(cfg);
  const int n = cfg.order;
  GainSchedule sched;
  sched.order = n;
  sched.tau = cfg.tau;
  sched.eigen_order = s.distinct_nonzero;  // already descending
  sched.entries.reserve(static_cast<std::size_t>(n) * s.distinct_nonzero.size());
  for (double lambda : s.distinct_nonzero) {
    GainVector k(n);
    for (int m = 1; m <= n; ++m) {
      k[m - 1] = binomial(n, m - 1) / (lambda * std::pow(cfg.tau, n - m + 1));
    }
    for (int j = 0; j < n; ++j) sched.entries.push_back(k);
  }
  return sched;
}

bool verify_nilpotent(const SystemConfig& cfg, double lambda,
                      const GainVector& k) {
  const Matrix h = closed_loop_block(cfg, lambda, k);
  Matrix power = h;
  for (int i = 1; i < cfg.order; ++i) power = power * h;
  const double scale = std::pow(std::max(1.0, max_abs_norm(h)), cfg.order);
  if (max_abs_norm(power) > 1e-9 * scale) return false;
  const CharPoly p = char_poly(cfg, lambda, k);
  for (int j = 1; j <= p.degree(); ++j) {
    if (std::fabs(p.coeffs[j]) > 1e-9) return false;
  }
  return true;
}

std::vector<double> product_annihilation(const std::vector<double>& lambdas,
                                         const SystemConfig& cfg,
                                         const GainSchedule& sched) {
  validate(cfg);
  if (sched.order != cfg.order) {
    throw DimensionMismatch("schedule order != system order");
  }
  std::vector<double> residuals;
  residuals.reserve(lambdas.size());
  for (double lambda : lambdas) {
    Matrix product = Matrix::identity(cfg.order);
    double scale = 1.0;
    for (const GainVector& k : sched.entries) {
      const Matrix block = closed_loop_block(cfg, lambda, k);
      product = block * product;  // x(k+1) = M_k x(k), newest on the left
      scale *= std::max(1.0, max_abs_norm(block));
    }
    residuals.push_back(max_abs_norm(product) / scale);
  }
  return residuals;
}

std::vector<double> product_annihilation(const Spectrum& s,
                                         const SystemConfig& cfg,
                                         const GainSchedule& sched) {
  if (!s.connected) throw Disconnected("annihilation needs a connected graph");
  return product_annihilation(s.distinct_nonzero, cfg, sched);
}

std::vector<double> final_consensus_state(const SystemConfig& cfg,
                                          const std::vector<double>& x0,
                                          std::int64_t k) {
  validate(cfg);
  const int n = cfg.order;
  if (x0.empty() || x0.size() % static_cast<std::size_t>(n) != 0) {
    throw DimensionMismatch("initial state length must be a multiple of order");
  }
  const std::size_t agents = x0.size() / n;
  std::vector<double> mean(n, 0.0);
  for (std::size_t p = 0; p < agents; ++p) {
    for (int l = 0; l < n; ++l) mean[l] += x0[p * n + l];
  }
  for (double& m : mean) m /= static_cast<double>(agents);
  return a_power(cfg, k) * mean;
}

}  // namespace fastcon
