#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "sar/errors.hpp"

namespace sar {

inline constexpr double simplex_tolerance = 1e-9;

/// A point (s, a, s~) of the unit simplex for the re-scaled system.
class ScaledState {
public:
  /// Accepts components up to `simplex_tolerance` outside the simplex and
  /// renormalizes them onto it; anything further off throws DomainError.
  static ScaledState make(double s, double a, double s_tilde) {
    const std::array<double, 3> x{s, a, s_tilde};
    for (double v : x) {
      if (!std::isfinite(v) || v < -simplex_tolerance || v > 1.0 + simplex_tolerance)
        throw DomainError("state component outside [0,1]: " + std::to_string(v));
    }
    const double sum = s + a + s_tilde;
    if (std::abs(sum - 1.0) > simplex_tolerance)
      throw DomainError("state off the simplex: s+a+s~ = " + std::to_string(sum));
    return project(x);
  }

  /// Initial condition with the non-addicted share split between s and s~.
  static ScaledState from_addicted(double a, double s_tilde = 0.0) {
    return make(1.0 - a - s_tilde, a, s_tilde);
  }

  static ScaledState addiction_free() { return ScaledState(1.0, 0.0, 0.0); }

  /// Clamp negatives and rescale to unit sum without any tolerance check.
  /// Used internally after integrator steps whose range is checked separately.
  static ScaledState project(const std::array<double, 3>& x) {
    const double s = std::max(x[0], 0.0), a = std::max(x[1], 0.0), st = std::max(x[2], 0.0);
    const double sum = s + a + st;
    return ScaledState(s / sum, a / sum, st / sum);
  }

  double s() const noexcept { return s_; }
  double a() const noexcept { return a_; }
  double s_tilde() const noexcept { return st_; }
  std::array<double, 3> array() const noexcept { return {s_, a_, st_}; }

private:
  ScaledState(double s, double a, double st) : s_(s), a_(a), st_(st) {}
  double s_, a_, st_;
};

/// Individual counts of the stochastic model.
struct RawState {
  std::int64_t S = 0;
  std::int64_t A = 0;
  std::int64_t S_tilde = 0;

  std::int64_t N() const noexcept { return S + A + S_tilde; }
  double addicted_fraction() const noexcept {
    const auto n = N();
    return n > 0 ? static_cast<double>(A) / static_cast<double>(n) : 0.0;
  }
  friend bool operator==(const RawState&, const RawState&) = default;
};

}  // namespace sar
