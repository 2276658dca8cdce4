#include "toricslope/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace toricslope {

namespace {

Vector2q to_q(const LatticePoint& p) { return Vector2q(Rational(p.x()), Rational(p.y())); }

Rational cross2(const Vector2q& a, const Vector2q& b) { return a.x() * b.y() - a.y() * b.x(); }

using HalfPlane = AffineInequality;

// Constraints q_j + p_j a + r_j b >= q_i + p_i a + r_i b for every j != i.
std::vector<HalfPlane> dominance_half_planes(const NewtonDiagram& diagram, std::size_t i) {
  std::vector<HalfPlane> planes;
  const auto& pi = diagram[i];
  for (std::size_t j = 0; j < diagram.size(); ++j) {
    if (j == i) continue;
    const auto& pj = diagram[j];
    planes.push_back({pj.q - pi.q, to_q(pj.exponent) - to_q(pi.exponent)});
  }
  return planes;
}

std::vector<Vector2q> clip(const std::vector<Vector2q>& polygon, const HalfPlane& plane) {
  std::vector<Vector2q> out;
  if (polygon.empty()) return out;
  for (std::size_t k = 0; k < polygon.size(); ++k) {
    const Vector2q& cur = polygon[k];
    const Vector2q& next = polygon[(k + 1) % polygon.size()];
    const Rational fc = plane.eval(cur);
    const Rational fn = plane.eval(next);
    if (fc >= 0) out.push_back(cur);
    if ((fc > 0 && fn < 0) || (fc < 0 && fn > 0)) {
      const Rational t = fc / (fc - fn);
      out.push_back(cur + (next - cur) * t);
    }
  }
  return out;
}

// Drops repeated and collinear vertices of a convex ring.
std::vector<Vector2q> simplify(std::vector<Vector2q> ring) {
  bool changed = true;
  while (changed && !ring.empty()) {
    changed = false;
    for (std::size_t k = 0; k < ring.size() && ring.size() > 1; ++k) {
      const std::size_t n = ring.size();
      const Vector2q& prev = ring[(k + n - 1) % n];
      const Vector2q& cur = ring[k];
      const Vector2q& next = ring[(k + 1) % n];
      if (cur == next || (n > 2 && cross2(cur - prev, next - cur) == 0)) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
    }
  }
  return ring;
}

Rational doubled_area(const std::vector<Vector2q>& ring) {
  Rational sum = 0;
  for (std::size_t k = 0; k < ring.size(); ++k) sum += cross2(ring[k], ring[(k + 1) % ring.size()]);
  return sum;
}

std::vector<Vector2q> region_polygon(const std::vector<HalfPlane>& planes, const Rational& bound) {
  std::vector<Vector2q> ring{Vector2q(0, 0), Vector2q(bound, 0), Vector2q(bound, bound), Vector2q(0, bound)};
  for (const auto& plane : planes) ring = clip(ring, plane);
  return simplify(std::move(ring));
}

Rational clip_bound_for(const std::vector<Face>& faces) {
  Rational bound = 0;
  for (const auto& f : faces) bound = std::max({bound, f.normal_a, f.normal_b});
  return bound + 1;
}

Vector2q normalized_ray(const Vector2q& d) {
  const Rational scale = std::max(d.x(), d.y());
  return d / scale;
}

std::vector<Vector2q> recession_rays(const std::vector<HalfPlane>& planes) {
  std::vector<Vector2q> candidates{Vector2q(1, 0), Vector2q(0, 1)};
  for (const auto& plane : planes) {
    const Vector2q perp(plane.gradient.y(), -plane.gradient.x());
    if (perp.x() >= 0 && perp.y() >= 0 && perp != Vector2q(0, 0)) candidates.push_back(perp);
    if (perp.x() <= 0 && perp.y() <= 0 && perp != Vector2q(0, 0)) candidates.push_back(Vector2q(-perp));
  }
  std::vector<Vector2q> feasible;
  for (const auto& c : candidates) {
    const bool ok = std::all_of(planes.begin(), planes.end(),
                                [&](const HalfPlane& p) { return p.gradient.dot(c) >= 0; });
    if (ok) feasible.push_back(normalized_ray(c));
  }
  if (feasible.empty()) return {};
  // Smallest and largest polar angle within the quadrant.
  Vector2q lo = feasible.front();
  Vector2q hi = feasible.front();
  for (const auto& d : feasible) {
    if (cross2(d, lo) > 0) lo = d;
    if (cross2(hi, d) > 0) hi = d;
  }
  if (lo == hi) return {lo};
  return {lo, hi};
}

}  // namespace

std::vector<Face> NewtonPolytope::nontrivial_faces() const {
  std::vector<Face> out;
  std::copy_if(faces.begin(), faces.end(), std::back_inserter(out), [](const Face& f) { return !f.trivial(); });
  return out;
}

Rational dominance_value(const WeightedPoint& point, const Vector2q& direction) {
  return point.q + Rational(point.exponent.x()) * direction.x() + Rational(point.exponent.y()) * direction.y();
}

bool DominanceRegion::contains(const Vector2q& point) const {
  if (point.x() < 0 || point.y() < 0) return false;
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const AffineInequality& h) { return h.eval(point) >= 0; });
}

std::vector<std::size_t> face_members(const Face& face, const NewtonDiagram& diagram) {
  std::vector<std::size_t> members;
  const Vector2q normal = face.normal();
  for (std::size_t j = 0; j < diagram.size(); ++j) {
    if (dominance_value(diagram[j], normal) == face.offset) members.push_back(j);
  }
  return members;
}

NewtonPolytope lower_hull(const NewtonDiagram& diagram) {
  const std::size_t n = diagram.size();

  // Candidate normals: planes through three points with non-collinear
  // exponents, planes through two points containing a coordinate recession
  // direction, and the horizontal plane q = 0.
  std::vector<std::pair<Vector2q, std::vector<std::size_t>>> candidates;
  candidates.push_back({Vector2q(0, 0), {}});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pi = diagram[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& pj = diagram[j];
      const Rational dq = pj.q - pi.q;
      const auto dp = pj.exponent.x() - pi.exponent.x();
      const auto dr = pj.exponent.y() - pi.exponent.y();
      if (dp != 0) candidates.push_back({Vector2q(Rational(-dq) / dp, 0), {i, j}});
      if (dr != 0) candidates.push_back({Vector2q(0, Rational(-dq) / dr), {i, j}});
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto& pk = diagram[k];
        const auto ep = pk.exponent.x() - pi.exponent.x();
        const auto er = pk.exponent.y() - pi.exponent.y();
        const auto det = dp * er - dr * ep;
        if (det == 0) continue;
        const Rational eq = pk.q - pi.q;
        // a dp + b dr = -dq ; a ep + b er = -eq
        const Rational a = (Rational(-dq) * er - Rational(-eq) * dr) / det;
        const Rational b = (Rational(-eq) * dp - Rational(-dq) * ep) / det;
        candidates.push_back({Vector2q(a, b), {i, j, k}});
      }
    }
  }

  std::map<std::pair<Rational, Rational>, Face> by_normal;
  for (const auto& [normal, defining] : candidates) {
    if (normal.x() < 0 || normal.y() < 0) continue;
    const auto key = std::make_pair(normal.x(), normal.y());
    if (by_normal.count(key)) continue;

    Rational d = dominance_value(diagram[0], normal);
    for (std::size_t j = 1; j < n; ++j) d = std::min(d, dominance_value(diagram[j], normal));
    Face face{normal.x(), normal.y(), d, {}};
    face.member_indices = face_members(face, diagram);
    if (face.member_indices.size() < 2) continue;
    const bool supporting = std::all_of(defining.begin(), defining.end(), [&](std::size_t idx) {
      return std::binary_search(face.member_indices.begin(), face.member_indices.end(), idx);
    });
    if (!supporting) continue;
    if (face.offset < 0) throw std::logic_error("lower hull produced a face with negative offset");
    by_normal.emplace(key, std::move(face));
  }

  NewtonPolytope polytope{diagram, {}, std::vector<bool>(n, false), {}};
  for (auto& [key, face] : by_normal) {
    if (face.trivial()) {
      polytope.diagnostics.push_back("face with normal (" + to_string(face.normal_a) + ", " +
                                     to_string(face.normal_b) +
                                     ", 1) has offset 0; treated as trivial");
    }
    polytope.faces.push_back(std::move(face));
  }

  const Rational bound = clip_bound_for(polytope.faces);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ring = region_polygon(dominance_half_planes(diagram, i), bound);
    polytope.vertex_flags[i] = ring.size() >= 3 && doubled_area(ring) > 0;
  }
  return polytope;
}

std::vector<DominanceRegion> dominance_regions(const NewtonPolytope& polytope) {
  const auto& diagram = polytope.diagram;
  const Rational bound = clip_bound_for(polytope.faces);
  std::vector<DominanceRegion> regions;
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    if (!polytope.vertex_flags[i]) continue;
    const auto planes = dominance_half_planes(diagram, i);
    DominanceRegion region{i, region_polygon(planes, bound), {}, recession_rays(planes), bound, planes};
    for (const auto& v : region.polygon) {
      if (v.x() == bound || v.y() == bound) continue;
      const Rational own = dominance_value(diagram[i], v);
      std::size_t ties = 0;
      for (std::size_t j = 0; j < diagram.size(); ++j) {
        if (dominance_value(diagram[j], v) == own) ++ties;
      }
      if (ties >= 2) region.corners.push_back(v);
    }
    regions.push_back(std::move(region));
  }
  return regions;
}

}  // namespace toricslope
