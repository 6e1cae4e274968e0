#pragma once

#include <cstdint>
#include <vector>

#include "fastcon/dynamics.hpp"
#include "fastcon/spectra.hpp"
#include "fastcon/stability.hpp"

namespace fastcon {

struct RateResult {
  double rate = 0.0;
  // Smallest eigenvalue attaining the max, for deterministic reporting.
  double argmax_lambda = 0.0;
  bool consensus = false;  // rate < 1
};

// Worst-case spectral radius of H(lambda, K) over the distinct nonzero
// Laplacian eigenvalues. Throws Disconnected.
RateResult convergence_rate(const Spectrum& s, const SystemConfig& cfg,
                            const GainVector& k);

// ((lambda_N - lambda_2) / (lambda_N + lambda_2))^(1/n).
double rate_lower_bound(const Spectrum& s, int order);

// Closed-form optimal gains for order 2:
// K1 = 2 lambda_2 / (tau^2 (lambda_2 + lambda_N) lambda_N), K2 = 2/(lambda_N tau).
GainVector optimal_gains_order2(const Spectrum& s, double tau);

// Gains required to attain the rate lower bound. f is the coefficient vector
// the gains are back-substituted from; the relation f_i = sum_m (-1)^m
// K_{n-i+1+m} tau^(i-m) C(n-i+m, n-i) is checked by gain_relation_residual.
struct GainDerivation {
  std::vector<double> f;
  GainVector gains;
  double target_rate = 0.0;
};

GainDerivation optimal_gains_general(const Spectrum& s, const SystemConfig& cfg);

// Max |f_i - (triangular form evaluated at gains)|; forward-substitution
// check of the derivation.
double gain_relation_residual(const GainDerivation& d, double tau);

struct EigenvalueRootReport {
  double lambda = 0.0;
  double max_modulus = 0.0;
};

struct ConsensusCheck {
  bool consensus = false;
  std::vector<EigenvalueRootReport> report;  // aligned with distinct_nonzero
};

// True when every root of every block characteristic polynomial has modulus
// below 1 - margin.
ConsensusCheck consensus_check(const Spectrum& s, const SystemConfig& cfg,
                               const GainVector& k, double margin = 0.0);

struct OptimizerOptions {
  int iterations = 5000;  // T
  double eta = 0.01;      // learning rate
  double delta = 1e-6;    // forward-difference step
  int restarts = 10;
  std::uint64_t seed = 1;
  // Component-wise init box for K^(0); empty means the default box
  // (0, 2 C(n, j-1) / (lambda_N tau^(n+1-j))) per component.
  std::vector<double> init_lo;
  std::vector<double> init_hi;
  int threads = 0;  // 0 = hardware concurrency
};

// best_iteration value marking the tail-average candidate rather than a
// visited iterate.
inline constexpr int kTailAverageIteration = -1;

struct OptimizerReport {
  GainVector best_gains;
  double best_rate = 0.0;
  int best_restart = 0;
  int best_iteration = 0;  // kTailAverageIteration for the averaged candidate
  int iterations_run = 0;  // per restart
  int restarts = 0;
  std::uint64_t seed = 0;
  // rate_trace[m][t] is r(K^(t)) for restart m, t = 0..T; final iterates are
  // reported alongside the tracked best so both views are available.
  std::vector<std::vector<double>> rate_trace;
  std::vector<GainVector> final_gains;
  std::vector<double> final_rates;
};

// Fixed-step forward-difference gradient descent on r(K), run independently
// from `restarts` seeded random starts; restart m draws from the RNG stream
// (seed, m), so the merged report is deterministic regardless of thread
// scheduling. Tracks the best iterate ever visited.
OptimizerReport gradient_descent_rate(const Spectrum& s, const SystemConfig& cfg,
                                      const OptimizerOptions& opts = {});

// The default init box upper bounds (lower bounds are zero).
std::vector<double> default_init_upper(const Spectrum& s,
                                       const SystemConfig& cfg);

}  // namespace fastcon
