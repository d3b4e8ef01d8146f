#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sar/errors.hpp"
#include "sar/model.hpp"
#include "sar/parameters.hpp"
#include "sar/polynomial.hpp"
#include "sar/state.hpp"

namespace sar {

/// Endemic-equilibrium polynomial in a, coefficients ascending [x0, x1, ...].
struct EndemicPolynomial {
  int degree = 0;
  std::vector<double> coefficients;

  double operator()(double a) const { return poly::evaluate<double>(coefficients, a); }
};

/// nu = 0 case: x2 a^2 + x1 a + x0.
inline EndemicPolynomial quadratic_coefficients(const ModelParameters& p) {
  if (p.nu() != 0.0)
    throw NumericError(NumericFailure::WrongCase, "quadratic form requires nu = 0, got " + std::to_string(p.nu()));
  const auto t = basic_thresholds(p);
  return {2,
          {t.r_mu * (1.0 - t.r0),                     //
           t.r0 * (1.0 - t.r_phi) + t.r_mu * t.r_phi,  //
           t.r_phi * t.r0}};
}

/// General case: x3 a^3 + x2 a^2 + x1 a + x0. For nu = 0 this is the quadratic
/// multiplied by (R_phi a + R_mu).
inline EndemicPolynomial cubic_coefficients(const ModelParameters& p) {
  const auto t = basic_thresholds(p);
  const double r0 = t.r0, rp = t.r_phi, rm = t.r_mu, nu = p.nu();
  return {3,
          {rm * rm * (1.0 - r0),
           rm * (nu * (1.0 - rm) + r0 * (1.0 - rp) + rp * (1.0 - r0) + rm * rp),
           rp * (r0 * (1.0 - rp) + rm * (r0 + rp) + nu * rm * (1.0 - rm)),
           rp * rp * r0}};
}

inline EndemicPolynomial endemic_polynomial(const ModelParameters& p) {
  return p.nu() == 0.0 ? quadratic_coefficients(p) : cubic_coefficients(p);
}

enum class Verdict { stable, unstable, marginal };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::unstable: return "unstable";
    case Verdict::marginal: return "marginal";
  }
  return "?";
}

inline constexpr double stability_tolerance = 1e-10;
inline constexpr double equilibrium_residual_tolerance = 1e-9;

struct StabilityReport {
  std::array<std::complex<double>, 3> eigenvalues{};
  Verdict verdict = Verdict::marginal;
};

enum class EquilibriumKind { addiction_free, endemic };

struct Equilibrium {
  ScaledState state = ScaledState::addiction_free();
  double a_root = 0.0;
  EquilibriumKind kind = EquilibriumKind::addiction_free;
  StabilityReport stability;
  bool degenerate = false;
};

inline Verdict classify_eigenvalues(const std::array<std::complex<double>, 3>& ev) {
  bool all_negative = true;
  for (const auto& l : ev) {
    if (l.real() > stability_tolerance) return Verdict::unstable;
    if (!(l.real() < -stability_tolerance)) all_negative = false;
  }
  return all_negative ? Verdict::stable : Verdict::marginal;
}

inline StabilityReport stability_at(const ModelParameters& p, const ScaledState& x) {
  const auto ev = poly::eigenvalues3(jacobian(p, x));
  StabilityReport r;
  for (std::size_t i = 0; i < 3 && i < ev.size(); ++i) r.eigenvalues[i] = ev[i];
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
            [](const auto& l, const auto& m) { return l.real() < m.real() || (l.real() == m.real() && l.imag() < m.imag()); });
  r.verdict = classify_eigenvalues(r.eigenvalues);
  return r;
}

inline double max_abs_rhs(const ModelParameters& p, const ScaledState& x) {
  const auto f = ode_rhs(p, x);
  return std::max({std::abs(f[0]), std::abs(f[1]), std::abs(f[2])});
}

/// Eigenvalue-based stability of an equilibrium. Throws NotAnEquilibrium when
/// the state does not annihilate the vector field.
inline StabilityReport stability(const ModelParameters& p, const Equilibrium& e) {
  const double r = max_abs_rhs(p, e.state);
  if (!(r <= equilibrium_residual_tolerance))
    throw NumericError(NumericFailure::NotAnEquilibrium, "max |rhs| = " + std::to_string(r));
  return stability_at(p, e.state);
}

/// Full state on the endemic branch for a given addicted share a:
/// s~ = gamma a / (phi a + mu), D = 1 + nu s~, s = mu D / (beta kappa a + mu D).
inline ScaledState endemic_state(const ModelParameters& p, double a) {
  const double st = p.gamma() * a / (p.phi() * a + p.mu());
  const double d = 1.0 + p.nu() * st;
  const double s = p.mu() * d / (p.beta() * p.kappa() * a + p.mu() * d);
  return ScaledState::make(s, a, st);
}

struct EquilibriumSet {
  Equilibrium addiction_free;
  std::vector<Equilibrium> endemic;     // ascending in a
  std::vector<double> discarded_roots;  // real roots outside (0, 1]
  bool degenerate = false;
};

inline EquilibriumSet solve_endemic_equilibria(const ModelParameters& p) {
  EquilibriumSet out;
  out.addiction_free.stability = stability_at(p, out.addiction_free.state);

  const auto poly = endemic_polynomial(p);
  const auto rr = poly::real_roots(poly.coefficients);
  std::vector<double> kept;
  for (double a : rr.values) {
    if (a > 0.0 && a <= 1.0)
      kept.push_back(a);
    else
      out.discarded_roots.push_back(a);
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Equilibrium e;
    e.kind = EquilibriumKind::endemic;
    e.a_root = kept[i];
    e.state = endemic_state(p, kept[i]);
    e.stability = stability_at(p, e.state);
    const bool near_prev = i > 0 && kept[i] - kept[i - 1] < poly::double_root_tolerance;
    const bool near_next = i + 1 < kept.size() && kept[i + 1] - kept[i] < poly::double_root_tolerance;
    e.degenerate = near_prev || near_next;
    out.degenerate = out.degenerate || e.degenerate;
    out.endemic.push_back(e);
  }
  return out;
}

// --- fold thresholds --------------------------------------------------------

/// A parameter value (expressed as kappa and R0) where the endemic polynomial
/// has a double root inside (0, 1].
struct Fold {
  double kappa = 0.0;
  double r0 = 0.0;
  double a_double = 0.0;
};

inline constexpr double fold_kappa_min = 1e-6;
inline constexpr double fold_kappa_max = 1.0;
inline constexpr int fold_scan_points = 20000;
inline constexpr int fold_bisection_iterations = 80;

namespace detail {

inline std::array<double, 4> cubic_array(const ModelParameters& p) {
  const auto c = cubic_coefficients(p).coefficients;
  return {c[0], c[1], c[2], c[3]};
}

inline double discriminant_at(const ModelParameters& base, double kappa) {
  const auto c = cubic_array(base.with_kappa(kappa));
  return poly::cubic_discriminant(c);
}

}  // namespace detail

/// All folds of the cubic over kappa in [1e-6, 1], located by a sign scan of
/// the cubic discriminant followed by 80 bisection steps per bracket.
inline std::vector<Fold> fold_points(const ModelParameters& p) {
  std::vector<Fold> folds;
  if (p.phi() == 0.0 || p.beta() == 0.0) return folds;  // polynomial degenerates to degree <= 1
  const double step = (fold_kappa_max - fold_kappa_min) / fold_scan_points;
  double k_prev = fold_kappa_min;
  double d_prev = detail::discriminant_at(p, k_prev);
  for (int i = 1; i <= fold_scan_points; ++i) {
    const double k = i == fold_scan_points ? fold_kappa_max : fold_kappa_min + i * step;
    const double d = detail::discriminant_at(p, k);
    if ((d_prev < 0.0) != (d < 0.0) || d == 0.0) {
      double lo = k_prev, hi = k;
      const bool lo_negative = d_prev < 0.0;
      for (int it = 0; it < fold_bisection_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((detail::discriminant_at(p, mid) < 0.0) == lo_negative)
          lo = mid;
        else
          hi = mid;
      }
      const double kf = 0.5 * (lo + hi);
      const auto at = p.with_kappa(kf);
      const double a = poly::cubic_double_root(detail::cubic_array(at));
      if (a > 0.0 && a <= 1.0) folds.push_back({kf, basic_thresholds(at).r0, a});
    }
    k_prev = k;
    d_prev = d;
  }
  return folds;
}

/// Closed form for the nu = 0 fold:
/// Rc = Rmu Rphi (1 + Rphi + 2 sqrt(Rphi (1 - Rmu))) / ((Rphi - 1)^2 + 4 Rmu Rphi).
inline double closed_form_rc(const BasicThresholds& t) {
  const double rp = t.r_phi, rm = t.r_mu;
  return rm * rp * (1.0 + rp + 2.0 * std::sqrt(rp * (1.0 - rm))) / ((rp - 1.0) * (rp - 1.0) + 4.0 * rm * rp);
}

/// Lower fold threshold. Closed form for nu = 0, numeric fold search otherwise.
inline double compute_rc(const ModelParameters& p) {
  if (p.nu() == 0.0) {
    const auto t = basic_thresholds(p);
    const double rc = closed_form_rc(t);
    // The double root sits at a = -x1 / (2 x2) evaluated at R0 = Rc.
    const double x1 = rc * (1.0 - t.r_phi) + t.r_mu * t.r_phi;
    const double x2 = t.r_phi * rc;
    const double a = x2 > 0.0 ? -x1 / (2.0 * x2) : -1.0;
    if (!(std::isfinite(rc) && a > 0.0 && a <= 1.0))
      throw NumericError(NumericFailure::NoFold, "no positive double root for nu = 0");
    return rc;
  }
  const auto folds = fold_points(p);
  if (folds.empty()) throw NumericError(NumericFailure::NoFold, "endemic cubic has no fold in (0,1]");
  return folds.front().r0;
}

/// Upper fold threshold; exists only when the cubic has a second fold.
inline double compute_r0_star(const ModelParameters& p) {
  if (p.nu() == 0.0)
    throw NumericError(NumericFailure::NoUpperFold, "quadratic case has at most two roots");
  const auto folds = fold_points(p);
  if (folds.size() < 2) throw NumericError(NumericFailure::NoUpperFold, "no second fold of the endemic cubic");
  return folds.back().r0;
}

// --- regions ----------------------------------------------------------------

/// Region of the forward-backward diagram; `none` when the thresholds do not
/// form the four-region structure (e.g. both folds above R0 = 1).
enum class Region { none = 0, one = 1, two = 2, three = 3, four = 4, degenerate = -1 };

inline std::string to_string(Region r) {
  switch (r) {
    case Region::none: return "none";
    case Region::degenerate: return "degenerate";
    default: return std::to_string(static_cast<int>(r));
  }
}

/// Positive endemic equilibria implied by each region label.
inline int expected_root_count(Region r) {
  switch (r) {
    case Region::one: return 0;
    case Region::two: return 2;
    case Region::three: return 3;
    case Region::four: return 1;
    default: return -1;
  }
}

inline constexpr double region_boundary_tolerance = 1e-9;

struct ThresholdSet {
  BasicThresholds basic;
  std::optional<double> r_c;
  std::optional<double> r0_star;
  Region region = Region::none;
};

/// Region of a given R0 in a family with fold thresholds rc and r0_star.
inline Region region_for(double r0, std::optional<double> rc, std::optional<double> r0_star) {
  for (auto b : {rc, std::optional<double>(1.0), r0_star})
    if (b && std::abs(r0 - *b) <= region_boundary_tolerance) return Region::degenerate;
  if (rc && *rc >= 1.0) return Region::none;
  if (r0_star && *r0_star <= 1.0) return Region::none;
  if (!rc) return r0 < 1.0 ? Region::one : Region::four;
  if (r0 < *rc) return Region::one;
  if (r0 < 1.0) return Region::two;
  if (r0_star && r0 < *r0_star) return Region::three;
  return Region::four;
}

inline std::optional<double> try_rc(const ModelParameters& p) {
  try {
    return compute_rc(p);
  } catch (const NumericError&) {
    return std::nullopt;
  }
}

inline std::optional<double> try_r0_star(const ModelParameters& p) {
  try {
    return compute_r0_star(p);
  } catch (const NumericError&) {
    return std::nullopt;
  }
}

inline ThresholdSet compute_thresholds(const ModelParameters& p) {
  ThresholdSet t;
  t.basic = basic_thresholds(p);
  if (p.nu() == 0.0) {
    t.r_c = try_rc(p);
  } else {
    const auto folds = fold_points(p);
    if (!folds.empty()) t.r_c = folds.front().r0;
    if (folds.size() >= 2) t.r0_star = folds.back().r0;
  }
  t.region = region_for(t.basic.r0, t.r_c, t.r0_star);
  return t;
}

/// Region 1..4 of the forward-backward diagram. Throws Degenerate when R0 is
/// within 1e-9 of a boundary and NotFourRegion outside the four-region layout.
inline Region classify_region(const ModelParameters& p) {
  const auto t = compute_thresholds(p);
  if (t.region == Region::degenerate)
    throw NumericError(NumericFailure::Degenerate, "R0 on a region boundary");
  if (t.region == Region::none)
    throw NumericError(NumericFailure::NotFourRegion, "thresholds do not satisfy Rc < 1 < R0*");
  return t.region;
}

}  // namespace sar
