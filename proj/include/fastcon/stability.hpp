#pragma once

#include <complex>
#include <vector>

#include "fastcon/dynamics.hpp"

namespace fastcon {

// det(zI - H(lambda, K)) in descending powers; coeffs[0] is exactly 1.
struct CharPoly {
  std::vector<double> coeffs;
  double lambda = 0.0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Coefficients of (s-1)^n R(r(s+1)/(s-1)) in descending powers of s; the
// leading coefficient may vanish (degree drop when R has a root at z = r).
struct BilinearPoly {
  std::vector<double> coeffs;
  double radius = 0.0;
};

// Characteristic polynomial of the closed-loop block, built by expanding the
// (z-1)-basis form: (z-1)^n plus lambda * tau^p * K_{n+1-p} * (z-1)^{n-p}
// summed over p = 1..n.
CharPoly char_poly(const SystemConfig& cfg, double lambda, const GainVector& k);

struct RootOptions {
  int max_iterations = 500;
  // Stop when the largest correction is below step_tol * max(1, max |root|).
  double step_tol = 1e-13;
  // Initial guesses sit on a circle of radius 1 + max |coeff| rotated by
  // this angle so no guess starts on a symmetry axis.
  double initial_angle = 0.4;
};

// Durand-Kerner simultaneous iteration. Input coefficients are descending;
// the leading coefficient must be nonzero (DegenerateInput otherwise).
// Throws NonConvergence when the iteration budget runs out.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs,
                                             const RootOptions& opts = {});
std::vector<std::complex<double>> poly_roots(const CharPoly& p,
                                             const RootOptions& opts = {});

// Largest root modulus of char_poly(cfg, lambda, k).
double block_spectral_radius(const SystemConfig& cfg, double lambda,
                             const GainVector& k);

enum class StabilityClass { stable, marginal, unstable };

// Routh-Hurwitz classification of a real polynomial in descending
// coefficient order: stable when every root has negative real part,
// marginal when none lies in the open right half plane but some sit on the
// imaginary axis. Zero first-column entries are handled by the epsilon
// substitution, full zero rows by differentiating the auxiliary polynomial.
StabilityClass routh_hurwitz_stable(const std::vector<double>& coeffs);

// Substitute z = r(s+1)/(s-1) and clear denominators: the roots of the
// result lie in the closed left half plane exactly when the roots of p lie
// in the closed disk of radius r.
BilinearPoly bilinear_coeffs(const CharPoly& p, double r);

}  // namespace fastcon
