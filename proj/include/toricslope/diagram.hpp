#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "toricslope/rational.hpp"

namespace toricslope {

/// Integer exponent pair (p, r) of a monomial section x^p y^r.
using LatticePoint = Eigen::Matrix<std::int64_t, 2, 1>;

/// Row-major (scanline) order: by r, then by p. This is the order in which
/// lattice points are enumerated and diagram points are indexed.
struct ScanlineLess {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    return a.y() != b.y() ? a.y() < b.y() : a.x() < b.x();
  }
};

std::string to_string(const LatticePoint& point);

/// Convex lattice polygon in the closed first quadrant containing the origin.
/// Vertices are stored counterclockwise; construction validates every invariant.
class LatticePolygon {
 public:
  /// Accepts either orientation and reorders to counterclockwise.
  /// Throws std::invalid_argument ("polygon has no interior" for zero area).
  explicit LatticePolygon(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }

  /// Twice the signed shoelace area; positive after construction.
  std::int64_t doubled_area() const;

  /// Closed-polygon membership (boundary included), exact.
  bool contains(const LatticePoint& point) const;

 private:
  std::vector<LatticePoint> vertices_;
};

struct WeightedPoint {
  LatticePoint exponent;
  Rational q;
};

using WeightMap = std::map<LatticePoint, Rational, ScanlineLess>;

/// Weighted exponent points {(p_j, r_j, q_j)} of a test configuration.
///
/// Invariants: distinct exponents, q_j >= 0 with min q_j = 0, and
/// volume = 2 * area of the convex hull of the exponents.
class NewtonDiagram {
 public:
  /// Validates and normalizes: the minimum weight is subtracted uniformly and
  /// recorded as shift(). Throws std::invalid_argument on repeated exponents,
  /// negative weights or an empty list.
  static NewtonDiagram from_points(std::vector<WeightedPoint> points);

  const std::vector<WeightedPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const WeightedPoint& operator[](std::size_t i) const { return points_[i]; }

  const Rational& volume() const noexcept { return volume_; }
  const Rational& shift() const noexcept { return shift_; }

  Rational mean_weight() const;

  /// Same diagram with every weight multiplied by `factor` (> 0).
  NewtonDiagram scaled(const Rational& factor) const;

 private:
  std::vector<WeightedPoint> points_;
  Rational volume_;
  Rational shift_;
};

/// Centered one-parameter-subgroup weights a_j = q_j - mean(q), summing to zero.
struct CentralWeights {
  std::vector<Rational> a;

  Rational min() const;
};

/// Every integer point of the closed polygon in scanline order.
std::vector<LatticePoint> enumerate_lattice_points(const LatticePolygon& polygon);

/// V = 2 * Euclidean area.
Rational polygon_volume(const LatticePolygon& polygon);

/// Binds one weight to every lattice point of the polygon. Throws
/// std::invalid_argument naming missing or extra points, or negative weights.
NewtonDiagram build_diagram(const LatticePolygon& polygon, const WeightMap& weights);

CentralWeights central_weights(const NewtonDiagram& diagram);

/// Lowest-weight slope contribution -2 a_N = 2 mean(q).
Rational trivial_slope_term(const NewtonDiagram& diagram);

/// Twice the area of the convex hull of a point set (0 when degenerate).
std::int64_t doubled_hull_area(std::vector<LatticePoint> points);

/// Counterclockwise convex hull without collinear boundary points.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

}  // namespace toricslope
