#include "fastcon/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fastcon/errors.hpp"
#include "fastcon/kernels.hpp"

namespace fastcon {

namespace {

// e(k) against the drifting consensus trajectory; the drift term comes from
// the closed form of A^k rather than accumulated products so round-off does
// not compound with k.
double consensus_error(const SystemConfig& cfg, int node_count,
                       const std::vector<double>& sums0, std::int64_t k,
                       const std::vector<double>& x,
                       std::vector<double>& scratch) {
  const int n = cfg.order;
  std::vector<double> drift = a_power(cfg, k) * sums0;
  for (double& d : drift) d /= node_count;
  scratch = x;
  for (int i = 0; i < node_count; ++i) {
    kernels::axpy(-1.0, drift.data(), &scratch[static_cast<std::size_t>(i) * n],
                  n);
  }
  return std::sqrt(kernels::sum_sq(scratch.data(), scratch.size()));
}

template <typename GainAt>
Trajectory run_simulation(const Graph& g, const SystemConfig& cfg,
                          const std::vector<double>& x0, int steps,
                          const SimOptions& opts, GainAt&& gain_at) {
  validate(cfg);
  validate(g);
  if (steps < 0) throw InvalidOptions("steps must be >= 0");
  const int n = cfg.order;
  if (x0.size() != static_cast<std::size_t>(g.node_count) * n) {
    throw DimensionMismatch("initial state length != N*n");
  }

  std::vector<double> sums0(n, 0.0);
  for (int p = 0; p < g.node_count; ++p) {
    for (int l = 0; l < n; ++l) sums0[l] += x0[static_cast<std::size_t>(p) * n + l];
  }

  Trajectory t;
  t.config = cfg;
  t.node_count = g.node_count;
  t.step_count = steps;

  const std::size_t values_per_state = x0.size();
  auto keep_states = [&](int k) {
    return k <= opts.max_state_steps &&
           static_cast<std::size_t>(k + 1) * values_per_state <=
               opts.max_state_values;
  };

  std::vector<double> x = x0;
  std::vector<double> scratch;
  t.errors.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    t.errors.push_back(consensus_error(cfg, g.node_count, sums0, k, x, scratch));
    if (keep_states(k)) t.states.push_back(x);
    if (k < steps) x = network_step(g, cfg, gain_at(k), x);
  }
  return t;
}

}  // namespace

Trajectory simulate_constant(const Graph& g, const SystemConfig& cfg,
                             const GainVector& k, const std::vector<double>& x0,
                             int steps, const SimOptions& opts) {
  if (k.size() != static_cast<std::size_t>(cfg.order)) {
    throw DimensionMismatch("gain vector length != order");
  }
  return run_simulation(g, cfg, x0, steps, opts,
                        [&](int) -> const GainVector& { return k; });
}

Trajectory simulate_scheduled(const Graph& g, const SystemConfig& cfg,
                              const GainSchedule& sched,
                              const std::vector<double>& x0, int steps,
                              const SimOptions& opts) {
  if (sched.order != cfg.order) {
    throw DimensionMismatch("schedule order != system order");
  }
  return run_simulation(g, cfg, x0, steps, opts,
                        [&](int k) { return sched.gains_at(k); });
}

ErrorSeries error_series(const Trajectory& t, int window_begin,
                         int window_end) {
  if (t.errors.empty()) throw EmptyTrajectory("trajectory has no samples");
  ErrorSeries out;
  const int last = static_cast<int>(t.errors.size()) - 1;
  out.window_begin = window_begin >= 0 ? window_begin : last / 2;
  out.window_end = window_end >= 0 ? window_end : last;
  out.window_begin = std::clamp(out.window_begin, 0, last);
  out.window_end = std::clamp(out.window_end, out.window_begin, last);

  out.points.reserve(t.errors.size());
  for (int k = 0; k <= last; ++k) out.points.emplace_back(k, t.errors[k]);

  // Least-squares slope of log e(k) over the window, skipping zeros and
  // non-finite samples.
  double sk = 0.0, sy = 0.0, skk = 0.0, sky = 0.0;
  int count = 0;
  for (int k = out.window_begin; k <= out.window_end; ++k) {
    const double e = t.errors[k];
    if (!(e > 0.0) || !std::isfinite(e)) continue;
    const double y = std::log(e);
    sk += k;
    sy += y;
    skk += static_cast<double>(k) * k;
    sky += k * y;
    ++count;
  }
  if (count >= 2 && skk * count - sk * sk > 0.0) {
    out.tail_slope = (count * sky - sk * sy) / (count * skk - sk * sk);
  } else {
    out.tail_slope = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

std::vector<double> random_initial_state(int node_count,
                                         const SystemConfig& cfg, double range,
                                         Rng& rng) {
  validate(cfg);
  if (node_count < 1) throw InvalidOptions("need at least one node");
  if (!(range >= 0.0)) throw InvalidOptions("init range must be >= 0");
  std::vector<double> x0(static_cast<std::size_t>(node_count) * cfg.order);
  for (double& v : x0) v = rng.uniform(-range, range);
  return x0;
}

}  // namespace fastcon
