#pragma once

// Test-only oracle for the large-u slope of the Aubin-Yau functional along a
// toric Bergman geodesic: 2 mean(q) - 2 avg_P(psi), with psi the lower convex
// envelope of the weights over the polygon. psi(x) is evaluated as the
// smallest barycentric interpolation over exponent triples containing x, and
// the average uses a centroid rule on a uniform subdivision of a fan
// triangulation of the polygon (psi is piecewise linear, so the error is
// second order in the mesh width).

#include <algorithm>
#include <limits>

#include "toricslope/diagram.hpp"

namespace envelope {

using toricslope::LatticePolygon;
using toricslope::NewtonDiagram;

inline double lower_envelope(const NewtonDiagram& d, double x, double y) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = d.size();
  auto px = [&](std::size_t i) { return static_cast<double>(d[i].exponent.x()); };
  auto py = [&](std::size_t i) { return static_cast<double>(d[i].exponent.y()); };
  auto q = [&](std::size_t i) { return toricslope::to_double(d[i].q); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double ax = px(j) - px(i), ay = py(j) - py(i);
        const double bx = px(k) - px(i), by = py(k) - py(i);
        const double det = ax * by - ay * bx;
        if (det == 0.0) continue;
        const double cx = x - px(i), cy = y - py(i);
        const double l1 = (cx * by - cy * bx) / det;
        const double l2 = (ax * cy - ay * cx) / det;
        const double l0 = 1.0 - l1 - l2;
        const double eps = -1e-12;
        if (l0 < eps || l1 < eps || l2 < eps) continue;
        best = std::min(best, l0 * q(i) + l1 * q(j) + l2 * q(k));
      }
    }
  }
  return best;
}

inline double average(const NewtonDiagram& d, const LatticePolygon& poly, int n = 300) {
  const auto& v = poly.vertices();
  double total = 0.0, area = 0.0;
  for (std::size_t t = 1; t + 1 < v.size(); ++t) {
    const double ox = static_cast<double>(v[0].x()), oy = static_cast<double>(v[0].y());
    const double ux = static_cast<double>(v[t].x()) - ox, uy = static_cast<double>(v[t].y()) - oy;
    const double wx = static_cast<double>(v[t + 1].x()) - ox, wy = static_cast<double>(v[t + 1].y()) - oy;
    const double tri = 0.5 * std::abs(ux * wy - uy * wx);
    const double cell = tri / (static_cast<double>(n) * n);
    // n^2 small triangles: upward ones at (a + 1/3, b + 1/3), downward at (a + 2/3, b + 2/3)
    for (int a = 0; a < n; ++a) {
      for (int b = 0; a + b < n; ++b) {
        for (int flip = 0; flip < 2; ++flip) {
          if (flip == 1 && a + b + 1 >= n) continue;
          const double s = (a + (flip ? 2.0 : 1.0) / 3.0) / n;
          const double r = (b + (flip ? 2.0 : 1.0) / 3.0) / n;
          total += cell * lower_envelope(d, ox + s * ux + r * wx, oy + s * uy + r * wy);
        }
      }
    }
    area += tri;
  }
  return total / area;
}

inline double slope(const NewtonDiagram& d, const LatticePolygon& poly) {
  return 2.0 * toricslope::to_double(d.mean_weight()) - 2.0 * average(d, poly);
}

}  // namespace envelope
