#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sar/polynomial.hpp"

namespace {

std::array<double, 4> from_roots(double lead, double r1, double r2, double r3) {
  return {-lead * r1 * r2 * r3, lead * (r1 * r2 + r1 * r3 + r2 * r3), -lead * (r1 + r2 + r3), lead};
}

}  // namespace

TEST(Evaluate, HornerAscending) {
  const double c[] = {1.0, -3.0, 2.0};  // 2x^2 - 3x + 1
  EXPECT_DOUBLE_EQ(sar::poly::evaluate<double>(c, 2.0), 3.0);
  EXPECT_DOUBLE_EQ(sar::poly::evaluate_derivative<double>(c, 2.0), 5.0);
}

TEST(Roots, Linear) {
  const double c[] = {-2.0, 4.0};
  const auto r = sar::poly::real_roots(c);
  ASSERT_EQ(r.values.size(), 1u);
  EXPECT_DOUBLE_EQ(r.values[0], 0.5);
}

TEST(Roots, QuadraticWithComplexPair) {
  const double c[] = {1.0, 0.0, 1.0};
  EXPECT_TRUE(sar::poly::real_roots(c).values.empty());
  EXPECT_EQ(sar::poly::roots(c).size(), 2u);
}

TEST(Roots, LeadingZerosAreTrimmed) {
  const double c[] = {-1.0, 0.0, 1.0, 0.0};
  const auto r = sar::poly::real_roots(c);
  ASSERT_EQ(r.values.size(), 2u);
  EXPECT_NEAR(r.values[0], -1.0, 1e-14);
  EXPECT_NEAR(r.values[1], 1.0, 1e-14);
}

TEST(Roots, ZeroConstantGivesExactZeroRoot) {
  const double c[] = {0.0, -0.5, 1.0};
  const auto r = sar::poly::real_roots(c);
  ASSERT_EQ(r.values.size(), 2u);
  EXPECT_EQ(r.values[0], 0.0);
  EXPECT_NEAR(r.values[1], 0.5, 1e-15);
}

TEST(Roots, DoubleRootIsFlagged) {
  const auto c = from_roots(1.0, 0.3, 0.3, 0.8);
  const auto r = sar::poly::real_roots(c);
  EXPECT_TRUE(r.degenerate);
  const auto sep = from_roots(1.0, 0.3, 0.31, 0.8);
  EXPECT_FALSE(sar::poly::real_roots(sep).degenerate);
}

TEST(Roots, CompanionMatchesCardano) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    std::array<double, 4> c;
    if (i % 2 == 0) {
      double r[3] = {u(rng), u(rng), u(rng)};
      std::sort(r, r + 3);
      if (r[1] - r[0] < 1e-2 || r[2] - r[1] < 1e-2) continue;
      c = from_roots(0.5 + std::abs(u(rng)), r[0], r[1], r[2]);
    } else {
      c = {u(rng), u(rng), u(rng), 0.5 + std::abs(u(rng))};
    }
    const double disc = sar::poly::cubic_discriminant(c);
    if (std::abs(disc) < 1e-6) continue;
    const auto expected = oracle::cardano(c);
    const auto got = sar::poly::real_roots(c).values;
    ASSERT_EQ(got.size(), expected.size()) << i;
    EXPECT_EQ(got.size(), disc > 0 ? 3u : 1u);
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], expected[k], 1e-10) << i;
  }
}

TEST(Discriminant, SignAndDoubleRoot) {
  EXPECT_GT(sar::poly::cubic_discriminant(from_roots(1.0, 0.1, 0.2, 0.3)), 0.0);
  EXPECT_LT(sar::poly::cubic_discriminant(std::array<double, 4>{1.0, 0.0, 1.0, 1.0}), 0.0);
  const auto c = from_roots(2.0, 0.25, 0.25, 0.7);
  EXPECT_NEAR(sar::poly::cubic_discriminant(c), 0.0, 1e-13);
  EXPECT_NEAR(sar::poly::cubic_double_root(c), 0.25, 1e-12);
}

TEST(Eigenvalues3, TriangularMatrix) {
  const double j[3][3] = {{-1.0, 5.0, 2.0}, {0.0, -2.0, 7.0}, {0.0, 0.0, 3.0}};
  auto ev = sar::poly::eigenvalues3(j);
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) { return a.real() < b.real(); });
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_NEAR(ev[0].real(), -2.0, 1e-12);
  EXPECT_NEAR(ev[1].real(), -1.0, 1e-12);
  EXPECT_NEAR(ev[2].real(), 3.0, 1e-12);
}

TEST(Eigenvalues3, RotationHasComplexPair) {
  const double j[3][3] = {{0.0, -1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, -0.5}};
  const auto ev = sar::poly::eigenvalues3(j);
  int complex_count = 0;
  for (const auto& z : ev)
    if (std::abs(z.imag()) > 0.5) {
      ++complex_count;
      EXPECT_NEAR(std::abs(z.imag()), 1.0, 1e-12);
      EXPECT_NEAR(z.real(), 0.0, 1e-12);
    }
  EXPECT_EQ(complex_count, 2);
}
