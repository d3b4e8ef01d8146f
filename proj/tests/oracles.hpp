#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sar/equilibria.hpp"
#include "sar/parameters.hpp"

namespace oracle {

inline sar::ModelParameters reference_rates(double kappa, double phi, double nu) {
  return sar::validate_parameters({0.00015, 0.009, 0.0027, phi, kappa, nu});
}

// Rates between 1e-4 and 1e-2.
inline sar::ModelParameters draw(std::mt19937_64& rng, bool zero_nu = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double mu = 5e-5 + 5e-4 * u(rng);
  const double beta = 0.002 + 0.02 * u(rng);
  const double gamma = 0.0005 + 0.005 * u(rng);
  const double phi = 0.012 * u(rng);
  const double kappa = u(rng);
  const double nu = zero_nu ? 0.0 : u(rng);
  return sar::validate_parameters({mu, beta, gamma, phi, kappa, nu});
}

// Real roots of c0 + c1 x + c2 x^2 + c3 x^3 by the trigonometric / Cardano formulas.
inline std::vector<double> cardano(const std::array<double, 4>& c) {
  const double b = c[2] / c[3], cc = c[1] / c[3], d = c[0] / c[3];
  const double p = cc - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * cc / 3.0 + d;
  const double shift = -b / 3.0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  std::vector<double> out;
  if (disc < 0.0) {
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double theta = std::acos(std::clamp(3.0 * q / (p * r), -1.0, 1.0)) / 3.0;
    for (int k = 0; k < 3; ++k) out.push_back(r * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) + shift);
  } else {
    const double u = std::cbrt(-q / 2.0 + std::sqrt(disc));
    const double v = std::cbrt(-q / 2.0 - std::sqrt(disc));
    out.push_back(u + v + shift);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Equilibrium condition on the a axis: with s and s~ eliminated, endemic
// equilibria are the zeros of beta g s + phi s~ - (mu + gamma).
inline double condition(const sar::ModelParameters& p, double a) {
  const double st = p.gamma() * a / (p.phi() * a + p.mu());
  const double g = p.kappa() / (1.0 + p.nu() * st);
  const double s = p.mu() / (p.beta() * g * a + p.mu());
  return p.beta() * g * s + p.phi() * st - (p.mu() + p.gamma());
}

// Sign changes of `condition` on a uniform grid over (0, 1].
inline std::vector<double> scan_roots(const sar::ModelParameters& p, double h = 1e-6) {
  std::vector<double> out;
  const auto n = static_cast<long>(std::llround(1.0 / h));
  double prev = condition(p, h);
  for (long i = 2; i <= n; ++i) {
    const double a = static_cast<double>(i) * h;
    const double v = condition(p, a);
    if ((prev < 0.0) != (v < 0.0)) out.push_back(a - h / 2);
    prev = v;
  }
  return out;
}

// Roots of the cubic in (0, 1], via cardano.
inline int count_in_unit(const std::array<double, 4>& c) {
  int n = 0;
  for (double r : cardano(c))
    if (r > 0.0 && r <= 1.0) ++n;
  return n;
}

// Lower fold for nu = 0 by bisection on the quadratic discriminant in kappa.
inline double rc_by_bisection(const sar::ModelParameters& base) {
  auto coefficients = [&](double kappa) { return sar::quadratic_coefficients(base.with_kappa(kappa)).coefficients; };
  auto disc = [&](double kappa) {
    const auto c = coefficients(kappa);
    return c[1] * c[1] - 4.0 * c[2] * c[0];
  };
  auto positive_vertex = [&](double kappa) {
    const auto c = coefficients(kappa);
    const double a = -c[1] / (2.0 * c[2]);
    return a > 0.0 && a <= 1.0;
  };
  double prev = 1e-6;
  for (double k = 1e-4; k <= 1.0; k += 1e-4) {
    if (disc(k) >= 0.0 && positive_vertex(k) && disc(prev) < 0.0) {
      double lo = prev, hi = k;
      for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (disc(mid) < 0.0 ? lo : hi) = mid;
      }
      return sar::basic_thresholds(base.with_kappa(0.5 * (lo + hi))).r0;
    }
    prev = k;
  }
  return NAN;
}

}  // namespace oracle
