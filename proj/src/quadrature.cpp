#include "toricslope/quadrature.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "toricslope/errors.hpp"

namespace toricslope {

namespace {

void validate(const FaceIntegralSpec& spec) {
  if (spec.denom_pairs.empty()) throw std::invalid_argument("face integral needs at least one denominator term");
  if (spec.power <= 0) throw std::invalid_argument("face integral power must be positive");
  std::set<ExponentPair, ScanlineLess> seen;
  for (const auto& p : spec.denom_pairs) {
    if (!seen.insert(p).second) {
      throw std::invalid_argument("repeated denominator exponent " + to_string(p));
    }
  }
}

// Signed distances (scaled by power) from (P, R) / power to each hull edge.
std::vector<double> edge_margins(const FaceIntegralSpec& spec, bool& interior) {
  const auto hull = convex_hull(spec.denom_pairs);
  std::vector<double> margins;
  interior = hull.size() >= 3;
  if (!interior) return margins;
  const LatticePoint z(spec.sum_p, spec.sum_r);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const LatticePoint v = hull[i];
    const LatticePoint e = hull[(i + 1) % hull.size()] - v;
    const LatticePoint rel = z - spec.power * v;
    const std::int64_t c = e.x() * rel.y() - e.y() * rel.x();
    if (c <= 0) interior = false;
    margins.push_back(static_cast<double>(c) / std::hypot(static_cast<double>(e.x()), static_cast<double>(e.y())));
  }
  return margins;
}

}  // namespace

bool convergence_check(const FaceIntegralSpec& spec) {
  validate(spec);
  bool interior = false;
  edge_margins(spec, interior);
  return interior;
}

double decay_margin(const FaceIntegralSpec& spec) {
  validate(spec);
  bool interior = false;
  const auto margins = edge_margins(spec, interior);
  if (!interior) return 0.0;
  return *std::min_element(margins.begin(), margins.end());
}

QuadratureResult face_integral(const FaceIntegralSpec& spec, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw std::invalid_argument("rel_tol must lie in (0, 1)");
  const double delta = decay_margin(spec);
  if (delta <= 0.0) {
    throw NumericalError("integral diverges: numerator exponent outside open Newton region");
  }

  // Box made of whole 8 x 8 cells so that every grid level lands on the same
  // lattice whatever rel_tol is; a tighter tolerance only adds outer cells and
  // finer levels.
  constexpr double kCell = 8.0;
  constexpr double kRoundoff = 8.0 * std::numeric_limits<double>::epsilon();
  // nothing below double resolution is reachable, so no point in a larger box
  const double needed = (std::log(1.0 / std::max(rel_tol, kRoundoff)) + 40.0) / delta;
  const double half_width = std::ceil(needed / kCell) * kCell;
  const double tail = 0.25 * 2.0 * std::numbers::pi * std::exp(-delta * half_width) *
                      (half_width / delta + 1.0 / (delta * delta));

  std::vector<double> ep;
  std::vector<double> er;
  for (const auto& p : spec.denom_pairs) {
    ep.push_back(static_cast<double>(p.x()));
    er.push_back(static_cast<double>(p.y()));
  }
  const double P = static_cast<double>(spec.sum_p);
  const double R = static_cast<double>(spec.sum_r);
  const double power = spec.power;
  std::vector<double> exps(ep.size());

  auto integrand = [&](double s, double w) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < ep.size(); ++a) {
      exps[a] = ep[a] * s + er[a] * w;
      m = std::max(m, exps[a]);
    }
    double sum = 0.0;
    for (double e : exps) sum += std::exp(e - m);
    return std::exp(P * s + R * w - power * (m + std::log(sum)));
  };

  // Trapezoid rule on nested square grids of step 2^-level. The integrand is
  // analytic in a strip around the real plane, so the error falls off like
  // exp(-c / h) and each level roughly squares the previous relative error.
  // The sum for level k+1 reuses level k and adds only the new nodes.
  constexpr int kMaxLevel = 8;
  constexpr std::size_t kBudget = 400'000'000;
  long double sum = 0.0L;
  std::size_t evaluations = 0;
  double previous = 0.0;
  double previous_diff = std::numeric_limits<double>::infinity();
  double value = 0.0;
  double estimate = std::numeric_limits<double>::infinity();
  for (int level = 0; level <= kMaxLevel; ++level) {
    const double h = std::ldexp(1.0, -level);
    const auto n = static_cast<std::int64_t>(half_width) << level;
    const auto side = static_cast<std::size_t>(2 * n + 1);
    if (evaluations + side * side > kBudget) break;
    for (std::int64_t i = -n; i <= n; ++i) {
      const bool i_old = level > 0 && i % 2 == 0;
      for (std::int64_t j = -n; j <= n; ++j) {
        if (i_old && j % 2 == 0) continue;
        sum += integrand(static_cast<double>(i) * h, static_cast<double>(j) * h);
        ++evaluations;
      }
    }
    value = static_cast<double>(0.25L * sum * h * h);
    if (level == 0) {
      previous = value;
      continue;
    }
    const double diff = std::abs(value - previous);
    // Once the differences collapse faster than linearly the new level is
    // far more accurate than the step that produced it.
    const double ratio = level >= 2 ? diff / previous_diff : 1.0;
    estimate = ratio < 0.1 ? diff * ratio : diff;
    estimate = std::max(estimate, kRoundoff * std::abs(value));
    if (estimate <= rel_tol * std::abs(value)) return {value, estimate + tail, evaluations};
    if (estimate <= kRoundoff * std::abs(value)) break;
    // Differences no longer shrinking: rounding dominates, finer grids cannot help.
    if (level >= 3 && diff >= previous_diff) break;
    previous = value;
    previous_diff = diff;
  }
  throw NumericalError("face integral refinement did not converge within the evaluation budget", value);
}

}  // namespace toricslope
