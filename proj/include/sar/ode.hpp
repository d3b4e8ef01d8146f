#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sar/errors.hpp"
#include "sar/model.hpp"
#include "sar/state.hpp"

namespace sar {

struct IntegratorConfig {
  double dt = 1.0;
  double t_end = 40000.0;
  int record_every = 1;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<ScaledState> states;
  double max_drift = 0.0;    // largest |s+a+s~-1| seen before renormalization
  double final_drift = 0.0;  // |s+a+s~-1| of the last raw step
};

inline constexpr int renormalize_every = 1000;
inline constexpr double stage_range_slack = 1e-6;

namespace detail {

inline void check_stage(const Vec3& x, double t) {
  for (double v : x)
    if (!(v >= -stage_range_slack && v <= 1.0 + stage_range_slack))
      throw NumericError(NumericFailure::StepTooLarge,
                         "RK4 stage left the unit cube near t = " + std::to_string(t));
}

inline Vec3 axpy(const Vec3& x, double h, const Vec3& k) {
  return {x[0] + h * k[0], x[1] + h * k[1], x[2] + h * k[2]};
}

/// One classic fourth-order Runge-Kutta step.
inline Vec3 rk4_step(const ModelParameters& p, const Vec3& x, double dt, double t) {
  const Vec3 k1 = vector_field(p, x);
  const Vec3 x2 = axpy(x, dt / 2, k1);
  check_stage(x2, t);
  const Vec3 k2 = vector_field(p, x2);
  const Vec3 x3 = axpy(x, dt / 2, k2);
  check_stage(x3, t);
  const Vec3 k3 = vector_field(p, x3);
  const Vec3 x4 = axpy(x, dt, k3);
  check_stage(x4, t);
  const Vec3 k4 = vector_field(p, x4);
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = x[i] + dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  check_stage(out, t + dt);
  return out;
}

inline double drift(const Vec3& x) { return std::abs(x[0] + x[1] + x[2] - 1.0); }

inline Vec3 renormalize(const Vec3& x) {
  const double sum = x[0] + x[1] + x[2];
  return {x[0] / sum, x[1] / sum, x[2] / sum};
}

inline void validate(const IntegratorConfig& cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0) || cfg.record_every < 1)
    throw DomainError("integrator config needs dt > 0, t_end > 0, record_every >= 1");
}

}  // namespace detail

/// Fixed-step RK4 on the re-scaled system. Records every `record_every`-th
/// step plus the final one; the state is renormalized onto the simplex every
/// 1000 steps after the drift has been measured.
inline Trajectory integrate(const ModelParameters& p, const ScaledState& x0, const IntegratorConfig& cfg) {
  detail::validate(cfg);
  const auto steps = static_cast<std::int64_t>(std::llround(cfg.t_end / cfg.dt));
  Trajectory tr;
  tr.times.reserve(static_cast<std::size_t>(steps / cfg.record_every + 2));
  tr.states.reserve(tr.times.capacity());
  tr.times.push_back(0.0);
  tr.states.push_back(x0);

  Vec3 x = x0.array();
  for (std::int64_t k = 1; k <= steps; ++k) {
    const double t = static_cast<double>(k - 1) * cfg.dt;
    x = detail::rk4_step(p, x, cfg.dt, t);
    const double d = detail::drift(x);
    tr.max_drift = std::max(tr.max_drift, d);
    if (k == steps) tr.final_drift = d;
    if (k % renormalize_every == 0) x = detail::renormalize(x);
    if (k % cfg.record_every == 0 || k == steps) {
      tr.times.push_back(static_cast<double>(k) * cfg.dt);
      tr.states.push_back(ScaledState::project(x));
    }
  }
  return tr;
}

struct SteadyState {
  ScaledState state = ScaledState::addiction_free();
  bool converged = false;
  double t = 0.0;
};

/// Integrates until max |rhs| < tol or t reaches t_max.
inline SteadyState steady_state(const ModelParameters& p, const ScaledState& x0, double tol = 1e-12,
                                double t_max = 1e6, double dt = 1.0) {
  if (!(tol > 0.0) || !(t_max > 0.0) || !(dt > 0.0))
    throw DomainError("steady_state needs tol, t_max, dt > 0");
  auto residual = [&](const Vec3& x) {
    const auto f = vector_field(p, x);
    return std::max({std::abs(f[0]), std::abs(f[1]), std::abs(f[2])});
  };
  Vec3 x = x0.array();
  double t = 0.0;
  std::int64_t k = 0;
  while (residual(x) >= tol) {
    if (t >= t_max) return {ScaledState::project(x), false, t};
    x = detail::rk4_step(p, x, dt, t);
    t = static_cast<double>(++k) * dt;
    if (k % renormalize_every == 0) x = detail::renormalize(x);
  }
  return {ScaledState::project(x), true, t};
}

}  // namespace sar
