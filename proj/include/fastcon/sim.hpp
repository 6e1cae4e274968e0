#pragma once

#include <utility>
#include <vector>

#include "fastcon/dynamics.hpp"
#include "fastcon/finite_time.hpp"
#include "fastcon/graph.hpp"
#include "fastcon/rng.hpp"

namespace fastcon {

struct Trajectory {
  // states[k] is x(k), agent-major; dense storage stops once the configured
  // cap is hit while errors keep going.
  std::vector<std::vector<double>> states;
  // errors[k] = || x(k) - (1/N)(1_N (x) I_n) A^k (1_N^T (x) I_n) x(0) ||_2
  std::vector<double> errors;
  SystemConfig config;
  int node_count = 0;
  int step_count = 0;
};

struct SimOptions {
  // Keep full states while both limits hold; errors are always retained.
  int max_state_steps = 10'000;
  std::size_t max_state_values = 1'000'000;
};

Trajectory simulate_constant(const Graph& g, const SystemConfig& cfg,
                             const GainVector& k, const std::vector<double>& x0,
                             int steps, const SimOptions& opts = {});

// Time-varying gains from the schedule; zero gains once it is exhausted, so
// the network coasts on the consensus subspace afterwards.
Trajectory simulate_scheduled(const Graph& g, const SystemConfig& cfg,
                              const GainSchedule& sched,
                              const std::vector<double>& x0, int steps,
                              const SimOptions& opts = {});

struct ErrorSeries {
  std::vector<std::pair<int, double>> points;  // (k, e(k))
  // Least-squares slope of log e(k) over [window_begin, window_end];
  // NaN when fewer than two finite positive errors fall in the window.
  double tail_slope = 0.0;
  int window_begin = 0;
  int window_end = 0;
};

// Window defaults to the second half of the trajectory when unset (-1).
ErrorSeries error_series(const Trajectory& t, int window_begin = -1,
                         int window_end = -1);

// Seeded uniform initial condition on [-range, range]^(N n).
std::vector<double> random_initial_state(int node_count,
                                         const SystemConfig& cfg, double range,
                                         Rng& rng);

}  // namespace fastcon
