#pragma once

#include <array>
#include <string>

#include "sar/errors.hpp"
#include "sar/parameters.hpp"
#include "sar/state.hpp"

namespace sar {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// g(s~) = kappa / (1 + nu s~). Values in [-1e-12, 0) are treated as 0.
inline double reducing_factor(const ModelParameters& p, double s_tilde) {
  if (s_tilde < 0.0 && s_tilde >= -1e-12) s_tilde = 0.0;
  if (!(s_tilde >= 0.0 && s_tilde <= 1.0))
    throw DomainError("reducing_factor: s~ outside [0,1]: " + std::to_string(s_tilde));
  return p.kappa() / (1.0 + p.nu() * s_tilde);
}

/// The re-scaled vector field on all of R^3 (no simplex check). Integrators
/// and finite-difference checks need to evaluate it slightly off the simplex.
inline Vec3 vector_field(const ModelParameters& p, const Vec3& x) {
  const double s = x[0], a = x[1], st = x[2];
  const double g = p.kappa() / (1.0 + p.nu() * st);
  const double infection = p.beta() * g * s * a;
  const double relapse = p.phi() * st * a;
  return {p.mu() - infection - p.mu() * s,
          infection + relapse - (p.mu() + p.gamma()) * a,
          p.gamma() * a - relapse - p.mu() * st};
}

inline Vec3 ode_rhs(const ModelParameters& p, const ScaledState& x) {
  return vector_field(p, x.array());
}

/// Analytic Jacobian of the re-scaled field, row i = d(rhs_i)/d(s, a, s~).
inline Mat3 jacobian(const ModelParameters& p, const Vec3& x) {
  const double s = x[0], a = x[1], st = x[2];
  const double bk = p.beta() * p.kappa();
  const double d = 1.0 + p.nu() * st;
  const double cross = bk * s * a * p.nu() / (d * d);
  Mat3 j{};
  j[0] = {-bk / d * a - p.mu(), -bk / d * s, cross};
  j[1] = {bk / d * a, bk / d * s + p.phi() * st - (p.mu() + p.gamma()), -cross + p.phi() * a};
  j[2] = {0.0, p.gamma() - p.phi() * st, -p.phi() * a - p.mu()};
  return j;
}

inline Mat3 jacobian(const ModelParameters& p, const ScaledState& x) { return jacobian(p, x.array()); }

struct BasicThresholds {
  double r0 = 0.0;     // beta kappa / (mu + gamma)
  double r_phi = 0.0;  // phi / (mu + gamma)
  double r_mu = 0.0;   // mu / (mu + gamma); equals 1 only when gamma = 0
};

inline BasicThresholds basic_thresholds(const ModelParameters& p) {
  // One infected class: the next-generation "matrices" F and V are scalars,
  // F = beta g(0) = beta kappa and V = mu + gamma.
  const double F = p.beta() * p.kappa();
  const double V = p.mu() + p.gamma();
  return {F / V, p.phi() / V, p.mu() / V};
}

}  // namespace sar
