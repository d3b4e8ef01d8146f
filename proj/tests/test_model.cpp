#include <gtest/gtest.h>

#include <random>

#include "sar/model.hpp"

namespace {

sar::ModelParameters fig4() { return sar::validate_parameters({0.00015, 0.009, 0.0027, 0.0044, 0.2, 0.8}); }

sar::ModelParameters random_parameters(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return sar::validate_parameters({1e-5 + 1e-3 * u(rng), 0.05 * u(rng), 0.01 * u(rng), 0.02 * u(rng), u(rng), u(rng)});
}

sar::ScaledState random_state(std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  const double x = e(rng), y = e(rng), z = e(rng), sum = x + y + z;
  return sar::ScaledState::make(x / sum, y / sum, z / sum);
}

}  // namespace

TEST(ReducingFactor, Examples) {
  const auto p = fig4();
  EXPECT_DOUBLE_EQ(sar::reducing_factor(p, 0.0), 0.2);
  EXPECT_DOUBLE_EQ(sar::reducing_factor(p.with_nu(0.0), 0.7), 0.2);
  EXPECT_NEAR(sar::reducing_factor(p, 0.5), 0.2 / 1.4, 1e-15);  // 0.142857...
}

TEST(ReducingFactor, DomainAndClamp) {
  const auto p = fig4();
  EXPECT_THROW(sar::reducing_factor(p, 1.01), sar::DomainError);
  EXPECT_THROW(sar::reducing_factor(p, -1e-6), sar::DomainError);
  EXPECT_DOUBLE_EQ(sar::reducing_factor(p, -1e-13), 0.2);
}

TEST(ReducingFactor, StrictlyDecreasingWhenNuPositive) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    auto p = random_parameters(rng);
    double lo = u(rng), hi = u(rng);
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) continue;
    const double glo = sar::reducing_factor(p, lo), ghi = sar::reducing_factor(p, hi);
    EXPECT_LE(ghi, p.kappa());
    if (p.nu() > 0 && p.kappa() > 0)
      EXPECT_GT(glo, ghi);
    const auto flat = p.with_nu(0.0);
    EXPECT_EQ(sar::reducing_factor(flat, lo), sar::reducing_factor(flat, hi));
  }
}

TEST(OdeRhs, AddictionFreeIsFixed) {
  const auto f = sar::ode_rhs(fig4(), sar::ScaledState::addiction_free());
  EXPECT_EQ(f[0], 0.0);
  EXPECT_EQ(f[1], 0.0);
  EXPECT_EQ(f[2], 0.0);
}

TEST(OdeRhs, Fig4Substitution) {
  const auto f = sar::ode_rhs(fig4(), sar::ScaledState::make(0.85, 0.15, 0.0));
  EXPECT_NEAR(f[1], 0.009 * 0.2 * 0.85 * 0.15 - (0.00015 + 0.0027) * 0.15, 1e-18);
  EXPECT_NEAR(f[1], -0.000198, 1e-15);
}

TEST(OdeRhs, SimplexConservation) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_parameters(rng);
    const auto f = sar::ode_rhs(p, random_state(rng));
    EXPECT_NEAR(f[0] + f[1] + f[2], 0.0, 1e-12);
  }
}

TEST(Jacobian, AddictionFreeMatchesClosedForm) {
  const auto p = fig4();
  const auto j = sar::jacobian(p, sar::ScaledState::addiction_free());
  const double bk = 0.009 * 0.2;
  const double expected[3][3] = {{-0.00015, -bk, 0.0}, {0.0, bk - 0.00285, 0.0}, {0.0, 0.0027, -0.00015}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(j[r][c], expected[r][c], 1e-18) << r << "," << c;
}

// Central differences of the vector field, step 1e-6.
TEST(Jacobian, MatchesFiniteDifferences) {
  std::mt19937_64 rng(3);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const auto p = random_parameters(rng);
    const auto x = random_state(rng).array();
    const auto j = sar::jacobian(p, x);
    for (int c = 0; c < 3; ++c) {
      auto xp = x, xm = x;
      xp[c] += h;
      xm[c] -= h;
      const auto fp = sar::vector_field(p, xp), fm = sar::vector_field(p, xm);
      for (int r = 0; r < 3; ++r) EXPECT_NEAR(j[r][c], (fp[r] - fm[r]) / (2 * h), 1e-5);
    }
  }
}

TEST(Jacobian, ConstantReducingFactorHasNoCrossTerm) {
  const auto p = fig4().with_nu(0.0);
  const auto j = sar::jacobian(p, sar::ScaledState::make(0.5, 0.3, 0.2));
  EXPECT_EQ(j[0][2], 0.0);
}

TEST(BasicThresholds, ReferenceValues) {
  const auto t = sar::basic_thresholds(fig4());
  EXPECT_NEAR(t.r0, 0.6315, 5e-4);
  EXPECT_NEAR(t.r_phi, 1.5439, 5e-4);
  EXPECT_NEAR(sar::basic_thresholds(fig4().with_phi(0.004)).r_phi, 1.4035, 5e-4);
  EXPECT_NEAR(t.r_mu, 0.00015 / 0.00285, 1e-15);
}

TEST(BasicThresholds, RelapseOrderingFollowsRates) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_parameters(rng);
    const auto t = sar::basic_thresholds(p);
    EXPECT_GT(t.r_mu, 0.0);
    EXPECT_LE(t.r_mu, 1.0);
    if (p.phi() > p.beta() * p.kappa()) EXPECT_GT(t.r_phi, t.r0);
    EXPECT_EQ(p.relapse_dominates(), p.phi() > p.beta() * p.kappa());
  }
}
