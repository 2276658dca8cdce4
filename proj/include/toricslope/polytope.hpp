#pragma once

#include <string>
#include <vector>

#include "toricslope/diagram.hpp"
#include "toricslope/rational.hpp"

namespace toricslope {

/// A face {a p + b r + q = d} of the Newton polytope with normal (a, b, 1).
///
/// Every member satisfies the plane equation exactly and every other diagram
/// point lies strictly above it. Faces with d = 0 pass through a lowest-weight
/// point on the coordinate axes and carry no slope contribution.
struct Face {
  Rational normal_a;
  Rational normal_b;
  Rational offset;
  std::vector<std::size_t> member_indices;

  Vector2q normal() const { return Vector2q(normal_a, normal_b); }
  bool trivial() const { return offset == 0; }
};

/// Lower hull of the diagram points translated by the positive orthant.
struct NewtonPolytope {
  NewtonDiagram diagram;
  std::vector<Face> faces;         ///< sorted by normal (a, then b)
  std::vector<bool> vertex_flags;  ///< one per diagram point
  std::vector<std::string> diagnostics;

  /// Faces with positive offset.
  std::vector<Face> nontrivial_faces() const;
};

/// offset + gradient . x >= 0
struct AffineInequality {
  Rational offset;
  Vector2q gradient;

  Rational eval(const Vector2q& x) const { return offset + gradient.dot(x); }
};

/// Cell of the dual fan: directions (alpha, beta) >= 0 in which one monomial
/// term dominates, i.e. q_v + p_v alpha + r_v beta is minimal.
struct DominanceRegion {
  std::size_t vertex_index;
  /// Polygon vertices in counterclockwise order. For unbounded regions the
  /// polygon is clipped to the box [0, clip_bound]^2 and includes the
  /// clipping points, which are not corners.
  std::vector<Vector2q> polygon;
  /// Vertices of the region where at least two terms tie: the normals of the
  /// faces incident to the vertex.
  std::vector<Vector2q> corners;
  /// Extreme recession directions (empty for bounded regions).
  std::vector<Vector2q> rays;
  Rational clip_bound;
  /// Defining inequalities besides alpha, beta >= 0.
  std::vector<AffineInequality> inequalities;

  /// Exact membership in the closed region.
  bool contains(const Vector2q& point) const;
};

/// Value of the affine function q_j + p_j alpha + r_j beta.
Rational dominance_value(const WeightedPoint& point, const Vector2q& direction);

/// All faces of the polytope with normal (a, b, 1), a, b >= 0, and at least
/// two members, in exact arithmetic.
NewtonPolytope lower_hull(const NewtonDiagram& diagram);

/// One region per vertex-flagged diagram point, tiling the quadrant.
std::vector<DominanceRegion> dominance_regions(const NewtonPolytope& polytope);

/// Indices of every diagram point on the face plane, ascending.
std::vector<std::size_t> face_members(const Face& face, const NewtonDiagram& diagram);

}  // namespace toricslope
