#include "toricslope/functional.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "toricslope/cubature.hpp"
#include "toricslope/errors.hpp"

namespace toricslope {

namespace {

// Component layout of the vector integrand.
enum Component : int {
  kPhiMd00 = 0,
  kPhiMd0u,
  kPhiMduu,
  kGradMdu,
  kGradMd0,
  kMduu,
  kMd0u,
  kMd00,
  kComponents
};

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

struct SoftmaxState {
  double value;
  Vec2 grad;
  Mat2 hess;
};

class FunctionalIntegrand {
 public:
  FunctionalIntegrand(const NewtonDiagram& diagram, double u) {
    const auto a = central_weights(diagram);
    for (std::size_t j = 0; j < diagram.size(); ++j) {
      p_.push_back(static_cast<double>(diagram[j].exponent.x()));
      r_.push_back(static_cast<double>(diagram[j].exponent.y()));
      shift_.push_back(-2.0 * u * to_double(a.a[j]));
    }
    scratch_.resize(p_.size());
  }

  CubatureVector<kComponents> operator()(double s, double w) {
    const SoftmaxState g0 = softmax(s, w, false);
    const SoftmaxState gu = softmax(s, w, true);
    const double phi = gu.value - g0.value;
    const Vec2 dphi = gu.grad - g0.grad;
    const Mat2 grad_form = dphi * dphi.transpose();

    const double md00 = mixed_discriminant(g0.hess, g0.hess);
    const double md0u = mixed_discriminant(g0.hess, gu.hess);
    const double mduu = mixed_discriminant(gu.hess, gu.hess);

    CubatureVector<kComponents> out;
    out[kPhiMd00] = phi * md00;
    out[kPhiMd0u] = phi * md0u;
    out[kPhiMduu] = phi * mduu;
    out[kGradMdu] = mixed_discriminant(grad_form, gu.hess);
    out[kGradMd0] = mixed_discriminant(grad_form, g0.hess);
    out[kMduu] = mduu;
    out[kMd0u] = md0u;
    out[kMd00] = md00;
    return out;
  }

 private:
  SoftmaxState softmax(double s, double w, bool shifted) {
    const std::size_t n = p_.size();
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      scratch_[j] = p_[j] * s + r_[j] * w + (shifted ? shift_[j] : 0.0);
      m = std::max(m, scratch_[j]);
    }
    double total = 0.0;
    for (auto& x : scratch_) {
      x = std::exp(x - m);
      total += x;
    }
    Vec2 grad = Vec2::Zero();
    for (std::size_t j = 0; j < n; ++j) {
      scratch_[j] /= total;
      grad += scratch_[j] * Vec2(p_[j], r_[j]);
    }
    Mat2 hess = Mat2::Zero();
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2 d = Vec2(p_[j], r_[j]) - grad;
      hess += scratch_[j] * d * d.transpose();
    }
    return {m + std::log(total), grad, hess};
  }

  std::vector<double> p_;
  std::vector<double> r_;
  std::vector<double> shift_;
  std::vector<double> scratch_;
};

}  // namespace

LogPotential reference_potential(const NewtonDiagram& diagram) {
  LogPotential pot;
  for (const auto& pt : diagram.points()) {
    pot.log_coefficients.push_back(0.0);
    pot.exponents.push_back(pt.exponent);
  }
  return pot;
}

LogPotential geodesic_potential(const NewtonDiagram& diagram, double u) {
  const auto a = central_weights(diagram);
  LogPotential pot;
  for (std::size_t j = 0; j < diagram.size(); ++j) {
    pot.log_coefficients.push_back(-2.0 * u * to_double(a.a[j]));
    pot.exponents.push_back(diagram[j].exponent);
  }
  return pot;
}

double truncation_half_width(const NewtonDiagram& diagram, double u) {
  std::int64_t extent = 0;
  for (const auto& pt : diagram.points()) {
    extent = std::max(extent, std::abs(pt.exponent.x()) + std::abs(pt.exponent.y()) + 1);
  }
  // Corners of the geodesic potential drift out by about 2u times the weight
  // spread, so the box has to follow them.
  const auto a = central_weights(diagram);
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t j = 0; j < a.a.size(); ++j) {
    const double x = to_double(a.a[j]);
    lo = j == 0 ? x : std::min(lo, x);
    hi = j == 0 ? x : std::max(hi, x);
  }
  return std::max(30.0, 4.0 * (u + 1.0) * static_cast<double>(extent)) + 4.0 * u * (hi - lo);
}

FunctionalSample evaluate_functional(const NewtonDiagram& diagram, double u, const FunctionalQuadrature& quad) {
  if (!(u >= 0.0)) throw std::invalid_argument("geodesic parameter u must be nonnegative");
  const double volume = to_double(diagram.volume());
  if (!(volume > 0.0)) throw std::invalid_argument("diagram exponents span no area; volume must be positive");

  FunctionalSample sample;
  sample.u = u;
  sample.half_width = truncation_half_width(diagram, u);
  const double L = sample.half_width;

  CubatureOptions options;
  options.rel_tol = quad.rel_tol;
  options.abs_tol = quad.abs_tol;
  options.max_evaluations = quad.max_evaluations;
  options.initial_panels = static_cast<int>(std::clamp(std::ceil(2.0 * L / 4.0), 8.0, 128.0));

  FunctionalIntegrand integrand(diagram, u);
  const auto cub = adaptive_cubature<kComponents>(integrand, Rect{-L, L, -L, L}, options);
  sample.evaluations = cub.evaluations;

  const auto& v = cub.value;
  sample.mixed[0] = v[kPhiMduu] / volume;
  sample.mixed[1] = v[kPhiMd0u] / volume;
  sample.mixed[2] = v[kPhiMd00] / volume;
  sample.f0 = (sample.mixed[0] + sample.mixed[1] + sample.mixed[2]) / 3.0;
  sample.j = (v[kGradMdu] / 3.0 + 2.0 * v[kGradMd0] / 3.0) / volume;
  sample.half_volume_uu = v[kMduu] / 2.0;
  sample.half_volume_0u = v[kMd0u] / 2.0;
  sample.half_volume_00 = v[kMd00] / 2.0;

  const double half_volume = volume / 2.0;
  sample.tail_estimate = std::max({std::abs(sample.half_volume_uu - half_volume),
                                   std::abs(sample.half_volume_0u - half_volume),
                                   std::abs(sample.half_volume_00 - half_volume)}) /
                         half_volume;
  sample.error_estimate = cub.error.head<5>().maxCoeff() / volume;

  if (!cub.converged) {
    throw NumericalError("functional quadrature at u = " + std::to_string(u) +
                             " did not converge within the evaluation budget",
                         sample.f0);
  }
  if (sample.tail_estimate > quad.tail_tol) {
    throw NumericalError("truncation tail at u = " + std::to_string(u) + " too large: relative volume deficit " +
                             std::to_string(sample.tail_estimate),
                         sample.f0);
  }
  return sample;
}

std::vector<FunctionalSample> sample_functional(const NewtonDiagram& diagram, std::span<const double> u_grid,
                                                const FunctionalQuadrature& quad) {
  std::vector<std::future<FunctionalSample>> pending;
  pending.reserve(u_grid.size());
  for (double u : u_grid) {
    pending.push_back(std::async(std::launch::async, [&diagram, u, &quad] { return evaluate_functional(diagram, u, quad); }));
  }
  std::vector<FunctionalSample> out;
  out.reserve(u_grid.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

double aubin_yau_numeric(const NewtonDiagram& diagram, double u, const FunctionalQuadrature& quad) {
  return evaluate_functional(diagram, u, quad).f0;
}

double mixed_energy_numeric(const NewtonDiagram& diagram, double u, int i, const FunctionalQuadrature& quad) {
  if (i < 0 || i > 2) throw std::invalid_argument("mixed energy index must be 0, 1 or 2");
  return evaluate_functional(diagram, u, quad).mixed[static_cast<std::size_t>(i)];
}

double j_functional_numeric(const NewtonDiagram& diagram, double u, const FunctionalQuadrature& quad) {
  return evaluate_functional(diagram, u, quad).j;
}

SlopeFit slope_fit(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 3) throw std::invalid_argument("slope fit needs at least 3 samples");
  for (std::size_t k = 1; k < samples.size(); ++k) {
    if (!(samples[k].first > samples[k - 1].first)) {
      throw std::invalid_argument("slope fit needs strictly increasing u");
    }
  }
  if (samples.back().first < 8.0) throw std::invalid_argument("slope fit needs max u >= 8");

  std::vector<double> quotients;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    quotients.push_back((samples[k].second - samples[k - 1].second) / (samples[k].first - samples[k - 1].first));
  }
  const std::size_t tail = std::min<std::size_t>(3, quotients.size());
  const std::span<const double> last(quotients.data() + quotients.size() - tail, tail);

  SlopeFit fit;
  fit.slope = last.back();
  const auto [lo, hi] = std::minmax_element(last.begin(), last.end());
  fit.stderr_estimate = 0.5 * (*hi - *lo);

  const double tol = 1e-8 * std::max(1.0, std::abs(fit.slope));
  for (std::size_t k = 2; k < last.size(); ++k) {
    const double d1 = last[k - 1] - last[k - 2];
    const double d2 = last[k] - last[k - 1];
    if (std::abs(d1) > tol && std::abs(d2) > tol && (d1 > 0) != (d2 > 0)) fit.non_monotone = true;
  }
  return fit;
}

}  // namespace toricslope
