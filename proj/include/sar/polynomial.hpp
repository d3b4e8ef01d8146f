#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

namespace sar::poly {

using cplx = std::complex<double>;

/// Coefficients are stored in ascending order: c[0] + c[1] x + c[2] x^2 + ...
template <typename T>
T evaluate(std::span<const double> c, T x) {
  T acc{0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <typename T>
T evaluate_derivative(std::span<const double> c, T x) {
  T acc{0.0};
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c[k];
  return acc;
}

/// Two real roots (or the real parts of a complex pair) closer than this are
/// reported as one degenerate double root.
inline constexpr double double_root_tolerance = 1e-7;

namespace detail {

inline cplx newton_polish(std::span<const double> c, cplx z, int steps) {
  const bool real = z.imag() == 0.0;
  for (int i = 0; i < steps; ++i) {
    const cplx f = evaluate<cplx>(c, z);
    const cplx df = evaluate_derivative<cplx>(c, z);
    if (f == 0.0 || std::abs(df) == 0.0) break;
    cplx next = z - f / df;
    if (real) next = cplx(next.real(), 0.0);
    // Near a double root f' vanishes and Newton can overshoot.
    if (std::abs(evaluate<cplx>(c, next)) > std::abs(f)) break;
    z = next;
  }
  return z;
}

}  // namespace detail

/// All complex roots via the eigenvalues of the companion matrix of the monic
/// polynomial, each polished with `polish_steps` guarded Newton steps.
/// Exact zero leading coefficients are dropped and exact zero constant terms
/// are deflated to exact zero roots.
inline std::vector<cplx> roots(std::span<const double> coeffs, int polish_steps = 2) {
  std::size_t hi = coeffs.size();
  while (hi > 0 && coeffs[hi - 1] == 0.0) --hi;
  std::vector<cplx> out;
  if (hi <= 1) return out;
  std::size_t lo = 0;
  while (coeffs[lo] == 0.0) {
    out.emplace_back(0.0, 0.0);
    ++lo;
  }
  const std::span<const double> c = coeffs.subspan(lo, hi - lo);
  const std::size_t n = c.size() - 1;
  if (n == 0) return out;
  if (n == 1) {
    out.emplace_back(-c[0] / c[1], 0.0);
    return out;
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double lead = c[n];
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    if (i > 0) companion(r, r - 1) = 1.0;
    companion(r, static_cast<Eigen::Index>(n - 1)) = -c[i] / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    out.push_back(detail::newton_polish(c, cplx(ev[i]), polish_steps));
  }
  return out;
}

struct RealRoots {
  std::vector<double> values;  // ascending
  bool degenerate = false;     // some pair closer than double_root_tolerance
};

/// Real roots, sorted ascending. Complex pairs whose imaginary part is below
/// `double_root_tolerance` count as a (degenerate) double real root.
inline RealRoots real_roots(std::span<const double> coeffs, int polish_steps = 2) {
  RealRoots r;
  for (const cplx& z : roots(coeffs, polish_steps)) {
    if (z.imag() == 0.0) {
      r.values.push_back(z.real());
    } else if (std::abs(z.imag()) < double_root_tolerance) {
      r.values.push_back(z.real());
      r.degenerate = true;
    }
  }
  std::sort(r.values.begin(), r.values.end());
  for (std::size_t i = 1; i < r.values.size(); ++i)
    if (r.values[i] - r.values[i - 1] < double_root_tolerance) r.degenerate = true;
  return r;
}

/// Discriminant of c0 + c1 x + c2 x^2 + c3 x^3. Positive: three distinct
/// real roots; negative: one real root and a complex pair; zero: repeated root.
inline double cubic_discriminant(std::span<const double, 4> c) {
  const double a = c[3], b = c[2], cc = c[1], d = c[0];
  return 18.0 * a * b * cc * d - 4.0 * b * b * b * d + b * b * cc * cc - 4.0 * a * cc * cc * cc -
         27.0 * a * a * d * d;
}

/// Location of the repeated root of a cubic with vanishing discriminant.
inline double cubic_double_root(std::span<const double, 4> c) {
  const double a = c[3], b = c[2], cc = c[1], d = c[0];
  return (9.0 * a * d - b * cc) / (2.0 * (b * b - 3.0 * a * cc));
}

/// Eigenvalues of a 3x3 real matrix from its characteristic cubic
/// l^3 - tr l^2 + m l - det.
template <typename Matrix3>
std::vector<cplx> eigenvalues3(const Matrix3& j) {
  const double tr = j[0][0] + j[1][1] + j[2][2];
  const double minors = (j[0][0] * j[1][1] - j[0][1] * j[1][0]) + (j[0][0] * j[2][2] - j[0][2] * j[2][0]) +
                        (j[1][1] * j[2][2] - j[1][2] * j[2][1]);
  const double det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
                     j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
                     j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
  const double c[4] = {-det, minors, -tr, 1.0};
  return roots(std::span<const double>(c, 4));
}

}  // namespace sar::poly
