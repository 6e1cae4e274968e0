#include "fastcon/stability.hpp"

#include <algorithm>
#include <cmath>

#include "fastcon/binomial.hpp"
#include "fastcon/errors.hpp"
#include "fastcon/kernels.hpp"

namespace fastcon {

namespace {

// Characteristic polynomial in the (z-1) basis, descending: coefficient of
// (z-1)^(n-p) is lambda * tau^p * K_{n+1-p}. These coefficients come straight
// from the inputs with no cancellation, unlike the z-basis expansion.
std::vector<double> shifted_char_coeffs(const SystemConfig& cfg, double lambda,
                                        const GainVector& k) {
  validate(cfg);
  const int n = cfg.order;
  if (k.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch("gain vector length != order");
  }
  std::vector<double> alpha(n + 1, 0.0);
  alpha[0] = 1.0;
  double tau_p = 1.0;
  for (int p = 1; p <= n; ++p) {
    tau_p *= cfg.tau;
    alpha[p] = lambda * tau_p * k[n - p];
  }
  return alpha;
}

}  // namespace

CharPoly char_poly(const SystemConfig& cfg, double lambda, const GainVector& k) {
  const std::vector<double> alpha = shifted_char_coeffs(cfg, lambda, k);
  const int n = cfg.order;
  CharPoly out;
  out.lambda = lambda;
  out.coeffs.assign(n + 1, 0.0);
  // Expand sum_m alpha[n-m] (z-1)^m into powers of z.
  for (int m = 0; m <= n; ++m) {
    const double a = alpha[n - m];
    if (a == 0.0) continue;
    for (int t = 0; t <= m; ++t) {
      const double sign = ((m - t) % 2 == 0) ? 1.0 : -1.0;
      out.coeffs[n - t] += a * binomial(m, t) * sign;
    }
  }
  out.coeffs[0] = 1.0;
  return out;
}

namespace {

// Horner evaluation of the monic polynomial together with the classic
// running bound on its own rounding error. Near a root of multiplicity m
// the true residual sits at that bound once the iterate is within
// eps^(1/m), which is the best double precision can certify; the solver
// stops when every residual reaches its bound.
struct EvalResult {
  std::complex<double> value;
  double error_bound;
};

EvalResult horner_monic(const std::vector<double>& tail,
                        std::complex<double> z) {
  const double az = std::abs(z);
  std::complex<double> v = 1.0;
  double bound = 1.0;
  for (double c : tail) {
    v = v * z + c;
    bound = bound * az + std::fabs(c);
  }
  constexpr double eps = 2.220446049250313e-16;
  return {v, 4.0 * static_cast<double>(tail.size()) * eps * bound};
}

}  // namespace

std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs,
                                             const RootOptions& opts) {
  if (coeffs.empty()) throw DegenerateInput("empty coefficient list");
  if (coeffs[0] == 0.0) throw DegenerateInput("zero leading coefficient");
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg == 0) return {};
  // Normalize to monic; root sets are scale invariant.
  std::vector<double> tail(deg);
  for (int i = 0; i < deg; ++i) tail[i] = coeffs[i + 1] / coeffs[0];
  if (deg == 1) return {std::complex<double>(-tail[0], 0.0)};

  const double radius = 1.0 + kernels::max_abs(tail.data(), tail.size());
  std::vector<std::complex<double>> x(deg);
  for (int i = 0; i < deg; ++i) {
    const double angle = 2.0 * M_PI * i / deg + opts.initial_angle;
    x[i] = std::polar(radius, angle);
  }
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    double max_step = 0.0;
    double max_root = 0.0;
    bool all_at_floor = true;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> den = 1.0;
      for (int j = 0; j < deg; ++j) {
        if (j != i) den *= x[i] - x[j];
      }
      if (den == std::complex<double>(0.0, 0.0)) {
        // Collided guesses; nudge apart and retry on the next pass.
        x[i] += std::complex<double>(1e-8 * radius, 1e-8 * radius);
        max_step = radius;
        all_at_floor = false;
        continue;
      }
      const EvalResult p = horner_monic(tail, x[i]);
      if (std::abs(p.value) > p.error_bound) all_at_floor = false;
      const std::complex<double> w = p.value / den;
      x[i] -= w;
      max_step = std::max(max_step, std::abs(w));
      max_root = std::max(max_root, std::abs(x[i]));
    }
    if (max_step <= opts.step_tol * std::max(1.0, max_root) || all_at_floor) {
      return x;
    }
  }
  throw NonConvergence("root iteration budget exhausted");
}

std::vector<std::complex<double>> poly_roots(const CharPoly& p,
                                             const RootOptions& opts) {
  return poly_roots(p.coeffs, opts);
}

double block_spectral_radius(const SystemConfig& cfg, double lambda,
                             const GainVector& k) {
  // Solve in the (z-1) basis, whose coefficients are exact in the inputs,
  // and shift back. This keeps full accuracy at z near 1, where the
  // consensus boundary lives; the z-basis expansion loses it to
  // cancellation whenever roots cluster there (open loop, near-deadbeat).
  const auto roots = poly_roots(shifted_char_coeffs(cfg, lambda, k));
  double rho = 0.0;
  for (const auto& y : roots) rho = std::max(rho, std::abs(1.0 + y));
  return rho;
}

namespace {

// One Routh row normalized to unit max magnitude; positive scaling keeps
// every sign decision intact and stops the recurrence from drifting into
// overflow or underflow.
void normalize_row(std::vector<double>& row) {
  const double m = kernels::max_abs(row.data(), row.size());
  if (m > 0.0) kernels::scale(1.0 / m, row.data(), row.size());
}

constexpr double kRowZeroTol = 1e-12;
constexpr double kEpsilonPivot = 1e-30;

}  // namespace

StabilityClass routh_hurwitz_stable(const std::vector<double>& coeffs) {
  // Leading zeros carry no roots; the zero polynomial is meaningless.
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0.0) ++first;
  if (first == coeffs.size()) throw DegenerateInput("zero polynomial");
  std::vector<double> a(coeffs.begin() + first, coeffs.end());

  // Roots at s = 0 sit on the axis; strip them before the array.
  bool axis_roots = false;
  while (a.size() > 1 && a.back() == 0.0) {
    a.pop_back();
    axis_roots = true;
  }
  const int deg = static_cast<int>(a.size()) - 1;
  if (deg == 0) return axis_roots ? StabilityClass::marginal : StabilityClass::stable;
  if (a[0] < 0.0) {
    for (double& c : a) c = -c;
  }

  // rows[i] holds the s^(deg-i) row.
  std::vector<std::vector<double>> rows(deg + 1);
  for (std::size_t i = 0; i < a.size(); i += 2) rows[0].push_back(a[i]);
  for (std::size_t i = 1; i < a.size(); i += 2) rows[1].push_back(a[i]);
  if (rows[1].empty()) rows[1].push_back(0.0);  // degree-1 even part edge

  bool anomaly = false;
  for (int i = 1; i < deg; ++i) {
    auto& prev = rows[i];
    const auto& prev2 = rows[i - 1];
    const double prev_mag = kernels::max_abs(prev.data(), prev.size());
    if (prev_mag <= kRowZeroTol) {
      // Whole row vanished: symmetric root constellation. Replace with the
      // derivative of the auxiliary polynomial built from the row above.
      anomaly = true;
      const int aux_power = deg - i + 1;
      for (std::size_t j = 0; j < prev.size() && j < prev2.size(); ++j) {
        prev[j] = prev2[j] * static_cast<double>(aux_power - 2 * static_cast<int>(j));
      }
    }
    normalize_row(prev);
    double pivot = prev[0];
    if (std::fabs(pivot) <= kRowZeroTol) {
      anomaly = true;
      pivot = kEpsilonPivot;
    }
    auto& next = rows[i + 1];
    next.resize(std::max<std::size_t>(prev2.size(), 1) - 1);
    if (next.empty()) next.push_back(0.0);
    for (std::size_t j = 0; j < next.size(); ++j) {
      const double b = j + 1 < prev2.size() ? prev2[j + 1] : 0.0;
      const double c = j + 1 < prev.size() ? prev[j + 1] : 0.0;
      next[j] = b - prev2[0] * c / pivot;
    }
  }

  // The final row reduces to the constant term; a vanishing one means a
  // symmetric pair survived to the end.
  if (kernels::max_abs(rows[deg].data(), rows[deg].size()) <= kRowZeroTol) {
    anomaly = true;
  }

  int sign_changes = 0;
  double last_sign = 1.0;  // rows[0][0] > 0 after the flip above
  for (int i = 1; i <= deg; ++i) {
    double lead = rows[i][0];
    if (std::fabs(lead) <= kRowZeroTol) lead = kEpsilonPivot;
    const double sign = lead > 0.0 ? 1.0 : -1.0;
    if (sign != last_sign) ++sign_changes;
    last_sign = sign;
  }

  if (sign_changes > 0) return StabilityClass::unstable;
  if (anomaly || axis_roots) return StabilityClass::marginal;
  return StabilityClass::stable;
}

BilinearPoly bilinear_coeffs(const CharPoly& p, double r) {
  if (!(r > 0.0)) throw InvalidOptions("bilinear radius must be positive");
  const int n = p.degree();
  // Accumulate b_q * r^(n-q) * (s+1)^(n-q) (s-1)^q, descending in s.
  std::vector<double> c(n + 1, 0.0);
  for (int q = 0; q <= n; ++q) {
    const double w = p.coeffs[q] * std::pow(r, n - q);
    if (w == 0.0) continue;
    // (s+1)^(n-q) (s-1)^q by convolving the two binomial expansions:
    // coefficient of s^(n-t).
    for (int t = 0; t <= n; ++t) {
      double conv = 0.0;
      for (int u = std::max(0, t - q); u <= std::min(n - q, t); ++u) {
        const int v = t - u;  // drop from the (s-1)^q factor
        const double sign = (v % 2 == 0) ? 1.0 : -1.0;
        conv += binomial(n - q, u) * binomial(q, v) * sign;
      }
      c[t] += w * conv;
    }
  }
  return {std::move(c), r};
}

}  // namespace fastcon
