#pragma once

#include <cstdint>
#include <vector>

#include "fastcon/dynamics.hpp"
#include "fastcon/spectra.hpp"

namespace fastcon {

// Time-varying gain schedule: one constant block of n steps per distinct
// nonzero eigenvalue, zero gains afterwards.
struct GainSchedule {
  std::vector<GainVector> entries;  // length n * l_bar
  int order = 0;
  double tau = 0.0;
  std::vector<double> eigen_order;  // descending eigenvalue per block

  int length() const { return static_cast<int>(entries.size()); }

  // K(k); zero vector for k >= length().
  GainVector gains_at(std::int64_t k) const {
    if (k >= 0 && k < length()) return entries[static_cast<std::size_t>(k)];
    return GainVector(order, 0.0);
  }
};

// Blockwise-constant deadbeat schedule over the descending distinct nonzero
// eigenvalues: K_m = C(n, m-1) / (lambda * tau^(n-m+1)) for the block at
// lambda, making each closed-loop block nilpotent of index <= n.
GainSchedule deadbeat_schedule(const Spectrum& s, const SystemConfig& cfg);

// True when H = A - lambda B K is numerically nilpotent: H^n vanishes and
// every characteristic coefficient past the leading one vanishes.
bool verify_nilpotent(const SystemConfig& cfg, double lambda,
                      const GainVector& k);

// Scaled max-norm of the ordered product of all scheduled closed-loop blocks
// at each eigenvalue; one residual per entry of lambdas. All residuals stay
// tiny exactly when the schedule reaches consensus at step n * l_bar.
std::vector<double> product_annihilation(const std::vector<double>& lambdas,
                                         const SystemConfig& cfg,
                                         const GainSchedule& sched);
std::vector<double> product_annihilation(const Spectrum& s,
                                         const SystemConfig& cfg,
                                         const GainSchedule& sched);

// [s_1(k), ..., s_n(k)]: the consensus trajectory every agent follows once
// consensus is reached, A^k applied to the initial state average.
std::vector<double> final_consensus_state(const SystemConfig& cfg,
                                          const std::vector<double>& x0,
                                          std::int64_t k);

}  // namespace fastcon
