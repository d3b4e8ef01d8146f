#pragma once

#include <cmath>
#include <vector>

#include "sar/errors.hpp"

namespace sar {

/// Unvalidated rates and factors, e.g. straight from a config file.
struct RawParameters {
  double mu = 0.0;     // natural exit rate
  double beta = 0.0;   // social-influence recruitment rate
  double gamma = 0.0;  // temporary recovery rate
  double phi = 0.0;    // relapse rate
  double kappa = 0.0;  // cost of addiction, in [0, 1]
  double nu = 0.0;     // willingness factor, in [0, 1]
};

inline std::vector<ParameterViolation> find_violations(const RawParameters& r) {
  std::vector<ParameterViolation> out;
  auto finite = [&](const char* name, double v) {
    if (!std::isfinite(v)) out.push_back({ViolationKind::NotFinite, name, v});
    return std::isfinite(v);
  };
  if (finite("mu", r.mu) && !(r.mu > 0.0)) out.push_back({ViolationKind::NonPositiveMu, "mu", r.mu});
  if (finite("beta", r.beta) && r.beta < 0.0) out.push_back({ViolationKind::NegativeRate, "beta", r.beta});
  if (finite("gamma", r.gamma) && r.gamma < 0.0)
    out.push_back({ViolationKind::NegativeRate, "gamma", r.gamma});
  if (finite("phi", r.phi) && r.phi < 0.0) out.push_back({ViolationKind::NegativeRate, "phi", r.phi});
  if (finite("kappa", r.kappa) && (r.kappa < 0.0 || r.kappa > 1.0))
    out.push_back({ViolationKind::OutOfRangeKappa, "kappa", r.kappa});
  if (finite("nu", r.nu) && (r.nu < 0.0 || r.nu > 1.0))
    out.push_back({ViolationKind::OutOfRangeNu, "nu", r.nu});
  return out;
}

/// One validated model instance. Only obtainable through validation, so every
/// ModelParameters in the program satisfies the range constraints.
class ModelParameters {
public:
  /// A valid placeholder instance: mu = 1, every other rate zero.
  ModelParameters() : raw_{1.0, 0.0, 0.0, 0.0, 0.0, 0.0} {}

  /// Throws ParameterError listing every violated constraint.
  static ModelParameters validated(const RawParameters& raw) {
    auto v = find_violations(raw);
    if (!v.empty()) throw ParameterError(std::move(v));
    return ModelParameters(raw);
  }

  double mu() const noexcept { return raw_.mu; }
  double beta() const noexcept { return raw_.beta; }
  double gamma() const noexcept { return raw_.gamma; }
  double phi() const noexcept { return raw_.phi; }
  double kappa() const noexcept { return raw_.kappa; }
  double nu() const noexcept { return raw_.nu; }
  const RawParameters& raw() const noexcept { return raw_; }

  ModelParameters with_kappa(double kappa) const {
    RawParameters r = raw_;
    r.kappa = kappa;
    return validated(r);
  }
  ModelParameters with_nu(double nu) const {
    RawParameters r = raw_;
    r.nu = nu;
    return validated(r);
  }
  ModelParameters with_phi(double phi) const {
    RawParameters r = raw_;
    r.phi = phi;
    return validated(r);
  }

  /// The modelling assumption R_phi > R_0 is reported, never enforced.
  bool relapse_dominates() const noexcept { return raw_.phi > raw_.beta * raw_.kappa; }

  friend bool operator==(const ModelParameters& a, const ModelParameters& b) {
    return a.raw_.mu == b.raw_.mu && a.raw_.beta == b.raw_.beta && a.raw_.gamma == b.raw_.gamma &&
           a.raw_.phi == b.raw_.phi && a.raw_.kappa == b.raw_.kappa && a.raw_.nu == b.raw_.nu;
  }

private:
  explicit ModelParameters(const RawParameters& r) : raw_(r) {}
  RawParameters raw_;
};

inline ModelParameters validate_parameters(const RawParameters& raw) {
  return ModelParameters::validated(raw);
}

}  // namespace sar
