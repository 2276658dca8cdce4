#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "toricslope/diagram.hpp"
#include "toricslope/symbols.hpp"

namespace toricslope {

/// g(s, w) = log sum_j c_j exp(p_j s + r_j w), with c_j = exp(log_coefficients[j]).
template <typename Scalar>
struct LogPotentialT {
  std::vector<Scalar> log_coefficients;
  std::vector<ExponentPair> exponents;
};
using LogPotential = LogPotentialT<double>;

/// Value, gradient and Hessian of a log-potential at one point. The Hessian
/// is the covariance of the exponent vectors under the softmax weights, so it
/// is positive semidefinite and the gradient lies in their convex hull.
template <typename Scalar>
struct HessianSampleT {
  Scalar value;
  Eigen::Matrix<Scalar, 2, 1> grad;
  Eigen::Matrix<Scalar, 2, 2> hess;

  Scalar g_ss() const { return hess(0, 0); }
  Scalar g_sw() const { return hess(0, 1); }
  Scalar g_ww() const { return hess(1, 1); }
};
using HessianSample = HessianSampleT<double>;

/// Reference potential: all coefficients 1.
LogPotential reference_potential(const NewtonDiagram& diagram);

/// Potential of the geodesic at u = log(1/|t|): c_j = |t|^(2 a_j) = exp(-2 u a_j).
LogPotential geodesic_potential(const NewtonDiagram& diagram, double u);

template <typename Scalar>
Scalar log_sum_exp(const LogPotentialT<Scalar>& pot, Scalar s, Scalar w) {
  Scalar m = -std::numeric_limits<Scalar>::infinity();
  for (std::size_t j = 0; j < pot.exponents.size(); ++j) {
    m = std::max(m, pot.log_coefficients[j] + Scalar(pot.exponents[j].x()) * s + Scalar(pot.exponents[j].y()) * w);
  }
  Scalar sum = 0;
  for (std::size_t j = 0; j < pot.exponents.size(); ++j) {
    sum += std::exp(pot.log_coefficients[j] + Scalar(pot.exponents[j].x()) * s + Scalar(pot.exponents[j].y()) * w - m);
  }
  return m + std::log(sum);
}

/// Shifted softmax evaluation; the Hessian is accumulated in centered form
/// sum_j pi_j (x_j - grad)(x_j - grad)^T to avoid cancellation.
template <typename Scalar>
HessianSampleT<Scalar> potential_derivs(const LogPotentialT<Scalar>& pot, Scalar s, Scalar w) {
  using Vec = Eigen::Matrix<Scalar, 2, 1>;
  const std::size_t n = pot.exponents.size();
  std::vector<Scalar> weights(n);
  Scalar m = -std::numeric_limits<Scalar>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    weights[j] = pot.log_coefficients[j] + Scalar(pot.exponents[j].x()) * s + Scalar(pot.exponents[j].y()) * w;
    m = std::max(m, weights[j]);
  }
  Scalar total = 0;
  for (auto& x : weights) {
    x = std::exp(x - m);
    total += x;
  }
  HessianSampleT<Scalar> out{m + std::log(total), Vec::Zero(), Eigen::Matrix<Scalar, 2, 2>::Zero()};
  for (std::size_t j = 0; j < n; ++j) {
    weights[j] /= total;
    out.grad += weights[j] * pot.exponents[j].template cast<Scalar>();
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Vec d = pot.exponents[j].template cast<Scalar>() - out.grad;
    out.hess += weights[j] * d * d.transpose();
  }
  return out;
}

/// Polarization of the determinant on symmetric 2x2 matrices:
/// MD(A, B) = A_ss B_ww + A_ww B_ss - 2 A_sw B_sw, so MD(H, H) = 2 det H.
/// It is the density of omega_A ^ omega_B against ds dw for toric forms.
template <typename DA, typename DB>
typename DA::Scalar mixed_discriminant(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a(0, 0) * b(1, 1) + a(1, 1) * b(0, 0) - a(0, 1) * b(1, 0) - a(1, 0) * b(0, 1);
}

inline double mixed_discriminant(const HessianSample& a, const HessianSample& b) {
  return mixed_discriminant(a.hess, b.hess);
}

struct FunctionalQuadrature {
  double rel_tol = 1e-9;
  double abs_tol = 1e-11;
  /// Largest tolerated relative deficit of the total volume mass inside the box.
  double tail_tol = 1e-7;
  std::size_t max_evaluations = 400'000'000;
};

/// Everything one pass over the (s, w) plane yields at a given u.
struct FunctionalSample {
  double u = 0.0;
  double f0 = 0.0;  ///< Aubin-Yau functional
  double j = 0.0;   ///< J-functional
  /// (1/V) \iint phi omega_0^i ^ omega_phi^(2-i), indexed by i.
  std::array<double, 3> mixed{};
  double half_volume_uu = 0.0;  ///< \iint MD(H_u, H_u) / 2
  double half_volume_0u = 0.0;  ///< \iint MD(H_0, H_u) / 2
  double half_volume_00 = 0.0;  ///< \iint MD(H_0, H_0) / 2
  double half_width = 0.0;      ///< truncation box
  double tail_estimate = 0.0;   ///< worst relative volume deficit
  double error_estimate = 0.0;  ///< largest quadrature error on f0, j, mixed
  std::size_t evaluations = 0;
};

/// Box half-width max(30, 4 (u + 1) max_j (p_j + r_j + 1)) + 4 u (max a - min a).
double truncation_half_width(const NewtonDiagram& diagram, double u);

/// Direct evaluation of the functionals along the geodesic. Throws
/// NumericalError when the truncation tail or quadrature error is too large.
FunctionalSample evaluate_functional(const NewtonDiagram& diagram, double u, const FunctionalQuadrature& quad = {});

/// Samples at each u, evaluated concurrently; output order follows u_grid.
std::vector<FunctionalSample> sample_functional(const NewtonDiagram& diagram, std::span<const double> u_grid,
                                                const FunctionalQuadrature& quad = {});

double aubin_yau_numeric(const NewtonDiagram& diagram, double u, const FunctionalQuadrature& quad = {});

/// i in {0, 1, 2}: (1/V) \iint phi MD(H_a, H_b) with (a, b) = (u, u), (0, u), (0, 0).
double mixed_energy_numeric(const NewtonDiagram& diagram, double u, int i, const FunctionalQuadrature& quad = {});

double j_functional_numeric(const NewtonDiagram& diagram, double u, const FunctionalQuadrature& quad = {});

struct SlopeFit {
  double slope = 0.0;
  double stderr_estimate = 0.0;
  bool non_monotone = false;  ///< difference quotients oscillate beyond tolerance
};

/// Successive-difference slope at the largest pair of u values; the spread of
/// the last (up to) three difference quotients gives the error estimate.
/// Requires >= 3 samples, strictly increasing u and max u >= 8.
SlopeFit slope_fit(std::span<const std::pair<double, double>> samples);

}  // namespace toricslope
