#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fastcon/graph.hpp"
#include "fastcon/matrix.hpp"

namespace fastcon {

// Chain-of-integrators agent: order n and sampling period tau.
struct SystemConfig {
  int order = 1;
  double tau = 1.0;
};

// Throws InvalidOptions unless order >= 1 and tau > 0.
void validate(const SystemConfig& cfg);

// Row gain vector [K_1, ..., K_n].
using GainVector = std::vector<double>;

// A is unit-diagonal with tau on the superdiagonal; B is tau times the last
// standard basis vector.
std::pair<Matrix, std::vector<double>> system_matrices(const SystemConfig& cfg);

// H(lambda, K) = A - lambda * B * K. Returns A bit-identically for lambda = 0.
Matrix closed_loop_block(const SystemConfig& cfg, double lambda,
                         const GainVector& k);

// Closed form of A^k: entry (i, j) is C(k, j-i) * tau^(j-i) above the
// diagonal, zero below.
Matrix a_power(const SystemConfig& cfg, std::int64_t k);

// One step of x(k+1) = (I_N (x) A - L (x) B K) x(k) on the agent-major state
// [x_1^T, ..., x_N^T]^T, evaluated blockwise through the edge list; the
// Kronecker products are never materialized.
std::vector<double> network_step(const Graph& g, const SystemConfig& cfg,
                                 const GainVector& k,
                                 const std::vector<double>& x);

// Same step against an explicit Laplacian.
std::vector<double> network_step(const Matrix& laplacian,
                                 const SystemConfig& cfg, const GainVector& k,
                                 const std::vector<double>& x);

}  // namespace fastcon
