#include "fastcon/rate_design.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "fastcon/binomial.hpp"
#include "fastcon/errors.hpp"
#include "fastcon/rng.hpp"

namespace fastcon {

namespace {

void require_connected(const Spectrum& s) {
  if (!s.connected) throw Disconnected("operation needs a connected graph");
}

double rate_over_distinct(const Spectrum& s, const SystemConfig& cfg,
                          const GainVector& k, double* argmax = nullptr) {
  double rate = -1.0;
  double at = 0.0;
  // Ascending scan with a strict > keeps the smallest eigenvalue on ties.
  for (std::size_t i = s.distinct_nonzero.size(); i-- > 0;) {
    const double lambda = s.distinct_nonzero[i];
    const double rho = block_spectral_radius(cfg, lambda, k);
    if (rho > rate) {
      rate = rho;
      at = lambda;
    }
  }
  if (argmax) *argmax = at;
  return rate;
}

}  // namespace

RateResult convergence_rate(const Spectrum& s, const SystemConfig& cfg,
                            const GainVector& k) {
  require_connected(s);
  validate(cfg);
  RateResult out;
  out.rate = rate_over_distinct(s, cfg, k, &out.argmax_lambda);
  out.consensus = out.rate < 1.0;
  return out;
}

double rate_lower_bound(const Spectrum& s, int order) {
  require_connected(s);
  if (order < 1) throw InvalidOptions("order must be >= 1");
  const double l2 = s.lambda2();
  const double ln = s.lambda_n();
  return std::pow((ln - l2) / (ln + l2), 1.0 / order);
}

GainVector optimal_gains_order2(const Spectrum& s, double tau) {
  require_connected(s);
  if (!(tau > 0.0)) throw InvalidOptions("sampling period must be > 0");
  const double l2 = s.lambda2();
  const double ln = s.lambda_n();
  return {2.0 * l2 / (tau * tau * (l2 + ln) * ln), 2.0 / (ln * tau)};
}

GainDerivation optimal_gains_general(const Spectrum& s,
                                     const SystemConfig& cfg) {
  require_connected(s);
  validate(cfg);
  const int n = cfg.order;
  const double tau = cfg.tau;
  const double l2 = s.lambda2();
  const double ln = s.lambda_n();

  GainDerivation d;
  d.target_rate = rate_lower_bound(s, n);
  d.f.assign(n, 0.0);
  if (ln - l2 <= 1e-14 * std::max(1.0, ln)) {
    // Equal extreme eigenvalues: the limit of the coefficient formula, which
    // lands on the deadbeat gains.
    for (int q = 1; q <= n; ++q) {
      const double sign = (q % 2 == 1) ? 1.0 : -1.0;
      d.f[q - 1] = sign * binomial(n, q) / ln;
    }
  } else {
    for (int q = 1; q <= n; ++q) {
      const double sign = (q % 2 == 0) ? 1.0 : -1.0;
      d.f[q - 1] = sign / (2.0 * l2 * ln) *
                   (std::pow(d.target_rate, 2 * q - n) * binomial(n, q) * (ln - l2) -
                    binomial(n, n - q) * (ln + l2));
    }
  }

  // K_n from f_1, then back-substitute descending.
  d.gains.assign(n, 0.0);
  d.gains[n - 1] = d.f[0] / tau;
  for (int j = n - 1; j >= 1; --j) {
    double acc = d.f[n - j];  // f_{n+1-j}
    for (int i = 1; i <= n - j; ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      acc += d.gains[j + i - 1] * sign * std::pow(tau, n - j + 1 - i) *
             binomial(j - 1 + i, j - 1);
    }
    d.gains[j - 1] = acc / std::pow(tau, n + 1 - j);
  }
  return d;
}

double gain_relation_residual(const GainDerivation& d, double tau) {
  const int n = static_cast<int>(d.gains.size());
  double worst = 0.0;
  for (int i = 1; i <= n; ++i) {
    double fi = 0.0;
    for (int m = 0; m <= i - 1; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      fi += sign * d.gains[n - i + m] * std::pow(tau, i - m) *
            binomial(n - i + m, n - i);
    }
    worst = std::max(worst, std::fabs(fi - d.f[i - 1]));
  }
  return worst;
}

ConsensusCheck consensus_check(const Spectrum& s, const SystemConfig& cfg,
                               const GainVector& k, double margin) {
  require_connected(s);
  validate(cfg);
  ConsensusCheck out;
  out.consensus = true;
  for (double lambda : s.distinct_nonzero) {
    const double rho = block_spectral_radius(cfg, lambda, k);
    out.report.push_back({lambda, rho});
    if (!(rho < 1.0 - margin)) out.consensus = false;
  }
  return out;
}

std::vector<double> default_init_upper(const Spectrum& s,
                                       const SystemConfig& cfg) {
  validate(cfg);
  const int n = cfg.order;
  const double ln = s.lambda_n();
  std::vector<double> hi(n);
  for (int j = 1; j <= n; ++j) {
    hi[j - 1] = 2.0 * binomial(n, j - 1) / (ln * std::pow(cfg.tau, n + 1 - j));
  }
  return hi;
}

namespace {

struct RestartOutcome {
  std::vector<double> trace;
  GainVector final_gains;
  GainVector best_gains;
  double best_rate = 0.0;
  int best_iteration = 0;
};

// One verbatim run of the fixed-step forward-difference descent loop from
// the supplied start.
RestartOutcome run_restart(const Spectrum& s, const SystemConfig& cfg,
                           const OptimizerOptions& opts, GainVector k) {
  const int n = cfg.order;
  RestartOutcome out;
  out.trace.reserve(opts.iterations + 1);

  auto rate_at = [&](const GainVector& g) {
    return rate_over_distinct(s, cfg, g);
  };
  auto gradient = [&](const GainVector& g, double base) {
    GainVector grad(n);
    GainVector probe = g;
    for (int m = 0; m < n; ++m) {
      probe[m] = g[m] + opts.delta;
      grad[m] = (rate_at(probe) - base) / opts.delta;
      probe[m] = g[m];
    }
    return grad;
  };

  double rate = rate_at(k);
  out.trace.push_back(rate);
  out.best_rate = rate;
  out.best_gains = k;
  out.best_iteration = 0;
  GainVector grad = gradient(k, rate);
  // With a constant step the loop settles into a small cycle around a
  // minimum; the tail average of the iterates sits at the cycle center, so
  // it is evaluated as one extra candidate alongside the visited iterates.
  GainVector tail_sum(n, 0.0);
  int tail_count = 0;
  const int tail_begin = opts.iterations - opts.iterations / 2;
  for (int t = 1; t <= opts.iterations; ++t) {
    for (int m = 0; m < n; ++m) k[m] -= opts.eta * grad[m];
    rate = rate_at(k);
    out.trace.push_back(rate);
    if (rate < out.best_rate) {
      out.best_rate = rate;
      out.best_gains = k;
      out.best_iteration = t;
    }
    if (t >= tail_begin) {
      for (int m = 0; m < n; ++m) tail_sum[m] += k[m];
      ++tail_count;
    }
    if (t < opts.iterations) grad = gradient(k, rate);
  }
  out.final_gains = k;
  if (tail_count > 0) {
    GainVector avg(n);
    for (int m = 0; m < n; ++m) avg[m] = tail_sum[m] / tail_count;
    const double avg_rate = rate_at(avg);
    if (avg_rate < out.best_rate) {
      out.best_rate = avg_rate;
      out.best_gains = std::move(avg);
      out.best_iteration = kTailAverageIteration;
    }
  }
  return out;
}

}  // namespace

OptimizerReport gradient_descent_rate(const Spectrum& s,
                                      const SystemConfig& cfg,
                                      const OptimizerOptions& opts) {
  require_connected(s);
  validate(cfg);
  if (opts.iterations < 1) throw InvalidOptions("iterations must be >= 1");
  if (!(opts.eta > 0.0)) throw InvalidOptions("eta must be > 0");
  if (!(opts.delta > 0.0)) throw InvalidOptions("delta must be > 0");
  if (opts.restarts < 1) throw InvalidOptions("restarts must be >= 1");

  const int n = cfg.order;
  std::vector<double> lo = opts.init_lo;
  std::vector<double> hi = opts.init_hi;
  if (lo.empty() && hi.empty()) {
    lo.assign(n, 0.0);
    hi = default_init_upper(s, cfg);
  }
  if (lo.size() != static_cast<std::size_t>(n) ||
      hi.size() != static_cast<std::size_t>(n)) {
    throw InvalidOptions("init box must have one bound per gain component");
  }
  for (int j = 0; j < n; ++j) {
    if (!(lo[j] <= hi[j])) throw InvalidOptions("init box lower > upper");
  }

  int workers = opts.threads > 0
                    ? opts.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, opts.restarts));

  std::vector<RestartOutcome> outcomes(opts.restarts);
  auto run_batch = [&](int begin, int end, auto&& start_for) {
    std::atomic<int> next{begin};
    auto pump = [&] {
      for (int m = next.fetch_add(1); m < end; m = next.fetch_add(1)) {
        outcomes[m] = run_restart(s, cfg, opts, start_for(m));
      }
    };
    if (workers == 1 || end - begin == 1) {
      pump();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) pool.emplace_back(pump);
      for (auto& th : pool) th.join();
    }
  };

  // Exploration phase: uniform draws from the init box, run in parallel.
  // Refinement phase: the remaining restarts rerun the same descent loop
  // from shrinking random perturbations of the best iterate seen so far.
  // The fixed-step loop settles into a small orbit around a minimum, so
  // each refinement start contributes a fresh orbit phase and the tracked
  // best tightens. Restart m always draws from RNG stream (seed, m) and the
  // anchor depends only on completed restarts, so the whole schedule is
  // deterministic however the exploration batch is scheduled.
  const int explore = opts.restarts - opts.restarts / 2;
  run_batch(0, explore, [&](int m) {
    Rng rng(opts.seed, static_cast<std::uint64_t>(m));
    GainVector k(n);
    for (int j = 0; j < n; ++j) k[j] = rng.uniform(lo[j], hi[j]);
    return k;
  });
  int anchor = 0;
  for (int m = 1; m < explore; ++m) {
    if (outcomes[m].best_rate < outcomes[anchor].best_rate) anchor = m;
  }
  // Perturbation sizes shrink toward a floor that keeps enough diversity to
  // escape a poor anchor late in the schedule.
  for (int m = explore; m < opts.restarts; ++m) {
    Rng rng(opts.seed, static_cast<std::uint64_t>(m));
    const double sigma = std::max(std::pow(0.5, m - explore + 1), 0.0625);
    GainVector k(n);
    for (int j = 0; j < n; ++j) {
      k[j] = outcomes[anchor].best_gains[j] * (1.0 + sigma * rng.uniform(-1.0, 1.0));
    }
    outcomes[m] = run_restart(s, cfg, opts, std::move(k));
    if (outcomes[m].best_rate < outcomes[anchor].best_rate) anchor = m;
  }

  OptimizerReport report;
  report.iterations_run = opts.iterations;
  report.restarts = opts.restarts;
  report.seed = opts.seed;
  report.best_rate = outcomes[0].best_rate;
  report.best_gains = outcomes[0].best_gains;
  report.best_restart = 0;
  report.best_iteration = outcomes[0].best_iteration;
  for (int m = 0; m < opts.restarts; ++m) {
    RestartOutcome& oc = outcomes[m];
    if (oc.best_rate < report.best_rate) {
      report.best_rate = oc.best_rate;
      report.best_gains = oc.best_gains;
      report.best_restart = m;
      report.best_iteration = oc.best_iteration;
    }
    report.final_rates.push_back(oc.trace.back());
    report.final_gains.push_back(std::move(oc.final_gains));
    report.rate_trace.push_back(std::move(oc.trace));
  }
  return report;
}

}  // namespace fastcon
