#pragma once

#include <cstdint>
#include <vector>

#include "toricslope/symbols.hpp"

namespace toricslope {

/// Integral of x^(2P-1) y^(2R-1) / (sum_a x^(2 p_a) y^(2 r_a))^power over the
/// open positive quadrant.
struct FaceIntegralSpec {
  std::int64_t sum_p = 0;
  std::int64_t sum_r = 0;
  std::vector<ExponentPair> denom_pairs;
  int power = 4;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// True iff (P, R) / power lies strictly inside the convex hull of the
/// denominator exponents; exact integer test against the hull edges.
bool convergence_check(const FaceIntegralSpec& spec);

/// Exponential decay rate of the log-coordinate integrand: power times the
/// distance from (P, R) / power to the nearest hull edge line. Zero when the
/// integral diverges.
double decay_margin(const FaceIntegralSpec& spec);

/// Evaluates the integral in log coordinates s = log x^2, w = log y^2:
///   I = 1/4 \iint exp(P s + R w - power * LSE(s, w)) ds dw,
/// truncated to a square whose analytic tail bound is far below rel_tol.
/// Throws NumericalError for divergent specs or when refinement stalls.
QuadratureResult face_integral(const FaceIntegralSpec& spec, double rel_tol = 1e-10);

}  // namespace toricslope
