#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "sar/equilibria.hpp"
#include "sar/errors.hpp"
#include "sar/parameters.hpp"

namespace sar {

struct BranchPoint {
  double kappa = 0.0;
  double r0 = 0.0;
  double a_root = 0.0;  // 0 for the addiction-free branch
  Verdict stability = Verdict::marginal;
  Region region = Region::none;
};

/// Flat list of branch points ordered by kappa, then by a within one kappa.
struct BifurcationDiagram {
  std::vector<BranchPoint> points;
  std::vector<double> kappas;      // the sweep grid
  std::vector<int> endemic_counts;  // positive roots per grid value
  ThresholdSet thresholds;          // direct computation for the base family
  ModelParameters base;
};

struct SweepConfig {
  double kappa_min = 0.01;
  double kappa_max = 0.5;
  int n_points = 2000;
};

inline BifurcationDiagram sweep(const ModelParameters& base, const SweepConfig& cfg = {}) {
  if (!(cfg.kappa_min >= 0.0 && cfg.kappa_min < cfg.kappa_max && cfg.kappa_max <= 1.0) || cfg.n_points < 2)
    throw DomainError("sweep needs 0 <= kappa_min < kappa_max <= 1 and n_points >= 2");
  BifurcationDiagram d{{}, {}, {}, compute_thresholds(base), base};
  const auto& th = d.thresholds;
  for (int i = 0; i < cfg.n_points; ++i) {
    const double kappa = i == cfg.n_points - 1
                             ? cfg.kappa_max
                             : cfg.kappa_min + (cfg.kappa_max - cfg.kappa_min) * i / (cfg.n_points - 1);
    const auto p = base.with_kappa(kappa);
    const double r0 = basic_thresholds(p).r0;
    const Region region = region_for(r0, th.r_c, th.r0_star);
    const auto eq = solve_endemic_equilibria(p);
    d.kappas.push_back(kappa);
    d.endemic_counts.push_back(static_cast<int>(eq.endemic.size()));
    d.points.push_back({kappa, r0, 0.0, eq.addiction_free.stability.verdict, region});
    for (const auto& e : eq.endemic) d.points.push_back({kappa, r0, e.a_root, e.stability.verdict, region});
  }
  return d;
}

/// A change of the positive-root count between adjacent sweep samples.
struct Transition {
  double kappa_before = 0.0, kappa_after = 0.0;
  double r0 = 0.0;  // midpoint of the bracketing R0 values
  int count_before = 0, count_after = 0;

  bool is_fold() const { return std::abs(count_after - count_before) == 2; }
};

struct DetectedThresholds {
  std::vector<Transition> transitions;
  ThresholdSet from_sweep;  // Rc / R0* read off the transitions
  double grid_spacing_r0 = 0.0;
  bool cross_validated = true;  // sweep and direct values agree within 2 spacings
};

/// Root-count transitions along a sweep. Folds (count changes of 2) give
/// Rc (first) and R0* (last); these are compared with the direct fold search.
inline DetectedThresholds detect_thresholds(const BifurcationDiagram& d) {
  DetectedThresholds out;
  const auto& k = d.kappas;
  const auto& n = d.endemic_counts;
  const double r0_per_kappa = d.base.beta() / (d.base.mu() + d.base.gamma());
  if (k.size() >= 2) out.grid_spacing_r0 = (k[1] - k[0]) * r0_per_kappa;

  std::vector<double> folds;
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (n[i] == n[i - 1]) continue;
    if (std::abs(n[i] - n[i - 1]) > 2)
      throw NumericError(NumericFailure::InsufficientResolution,
                         "root count jumps from " + std::to_string(n[i - 1]) + " to " + std::to_string(n[i]) +
                             " between kappa " + std::to_string(k[i - 1]) + " and " + std::to_string(k[i]));
    Transition t{k[i - 1], k[i], 0.5 * (k[i - 1] + k[i]) * r0_per_kappa, n[i - 1], n[i]};
    if (t.is_fold()) folds.push_back(t.r0);
    out.transitions.push_back(t);
  }

  out.from_sweep.basic = basic_thresholds(d.base);
  if (!folds.empty()) out.from_sweep.r_c = folds.front();
  if (folds.size() >= 2) out.from_sweep.r0_star = folds.back();
  out.from_sweep.region = region_for(out.from_sweep.basic.r0, out.from_sweep.r_c, out.from_sweep.r0_star);

  const double tol = 2.0 * out.grid_spacing_r0;
  const double lo = k.empty() ? 0.0 : k.front() * r0_per_kappa;
  const double hi = k.empty() ? 0.0 : k.back() * r0_per_kappa;
  auto agree = [&](const std::optional<double>& swept, std::optional<double> direct) {
    if (direct && (*direct < lo || *direct > hi)) direct.reset();  // outside the swept window
    if (!swept || !direct) return swept.has_value() == direct.has_value();
    return std::abs(*swept - *direct) <= tol;
  };
  out.cross_validated = agree(out.from_sweep.r_c, d.thresholds.r_c) &&
                        agree(out.from_sweep.r0_star, d.thresholds.r0_star);
  return out;
}

}  // namespace sar
