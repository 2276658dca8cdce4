#include "toricslope/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toricslope {

namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

std::int64_t signed_doubled_area(const std::vector<LatticePoint>& ring) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& a = ring[i];
    const auto& b = ring[(i + 1) % ring.size()];
    sum += a.x() * b.y() - b.x() * a.y();
  }
  return sum;
}

std::string join(const std::vector<LatticePoint>& points) {
  std::string out;
  for (const auto& p : points) {
    if (!out.empty()) out += ", ";
    out += to_string(p);
  }
  return out;
}

}  // namespace

std::string to_string(const LatticePoint& point) {
  std::ostringstream os;
  os << "(" << point.x() << "," << point.y() << ")";
  return os.str();
}

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw std::invalid_argument("polygon has no interior");

  std::set<LatticePoint, ScanlineLess> seen;
  for (const auto& v : vertices_) {
    if (v.x() < 0 || v.y() < 0) {
      throw std::invalid_argument("polygon vertex " + to_string(v) + " lies outside the first quadrant");
    }
    if (!seen.insert(v).second) throw std::invalid_argument("repeated polygon vertex " + to_string(v));
  }

  const std::int64_t area = signed_doubled_area(vertices_);
  if (area == 0) throw std::invalid_argument("polygon has no interior");
  if (area < 0) std::reverse(vertices_.begin(), vertices_.end());

  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& prev = vertices_[(i + n - 1) % n];
    const auto& cur = vertices_[i];
    const auto& next = vertices_[(i + 1) % n];
    if (cross(prev, cur, next) <= 0) {
      throw std::invalid_argument("polygon is not strictly convex at vertex " + to_string(cur));
    }
  }

  if (!contains(LatticePoint::Zero())) throw std::invalid_argument("polygon does not contain the origin");
}

std::int64_t LatticePolygon::doubled_area() const { return signed_doubled_area(vertices_); }

bool LatticePolygon::contains(const LatticePoint& point) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % n], point) < 0) return false;
  }
  return true;
}

NewtonDiagram NewtonDiagram::from_points(std::vector<WeightedPoint> points) {
  if (points.empty()) throw std::invalid_argument("Newton diagram needs at least one point");

  std::set<LatticePoint, ScanlineLess> seen;
  Rational min_q = points.front().q;
  for (const auto& pt : points) {
    if (pt.exponent.x() < 0 || pt.exponent.y() < 0) {
      throw std::invalid_argument("exponent " + to_string(pt.exponent) + " has a negative entry");
    }
    if (!seen.insert(pt.exponent).second) {
      throw std::invalid_argument("repeated exponent " + to_string(pt.exponent) + " in Newton diagram");
    }
    if (pt.q < 0) {
      throw std::invalid_argument("negative weight " + to_string(pt.q) + " at " + to_string(pt.exponent));
    }
    min_q = std::min(min_q, pt.q);
  }

  NewtonDiagram diagram;
  diagram.shift_ = min_q;
  for (auto& pt : points) pt.q -= min_q;
  diagram.points_ = std::move(points);

  std::vector<LatticePoint> exponents;
  exponents.reserve(diagram.points_.size());
  for (const auto& pt : diagram.points_) exponents.push_back(pt.exponent);
  diagram.volume_ = Rational(doubled_hull_area(std::move(exponents)));
  return diagram;
}

Rational NewtonDiagram::mean_weight() const {
  Rational sum = 0;
  for (const auto& pt : points_) sum += pt.q;
  return sum / Rational(static_cast<long>(points_.size()));
}

NewtonDiagram NewtonDiagram::scaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("weight scale factor must be positive");
  NewtonDiagram out = *this;
  for (auto& pt : out.points_) pt.q *= factor;
  out.shift_ *= factor;
  return out;
}

Rational CentralWeights::min() const { return *std::min_element(a.begin(), a.end()); }

std::vector<LatticePoint> enumerate_lattice_points(const LatticePolygon& polygon) {
  std::int64_t max_p = 0;
  std::int64_t max_r = 0;
  for (const auto& v : polygon.vertices()) {
    max_p = std::max(max_p, v.x());
    max_r = std::max(max_r, v.y());
  }
  std::vector<LatticePoint> points;
  for (std::int64_t r = 0; r <= max_r; ++r) {
    for (std::int64_t p = 0; p <= max_p; ++p) {
      const LatticePoint candidate(p, r);
      if (polygon.contains(candidate)) points.push_back(candidate);
    }
  }
  return points;
}

Rational polygon_volume(const LatticePolygon& polygon) { return Rational(polygon.doubled_area()); }

NewtonDiagram build_diagram(const LatticePolygon& polygon, const WeightMap& weights) {
  const auto lattice = enumerate_lattice_points(polygon);
  const std::set<LatticePoint, ScanlineLess> lattice_set(lattice.begin(), lattice.end());

  std::vector<LatticePoint> missing;
  for (const auto& p : lattice) {
    if (!weights.count(p)) missing.push_back(p);
  }
  std::vector<LatticePoint> extra;
  for (const auto& [p, q] : weights) {
    if (!lattice_set.count(p)) extra.push_back(p);
  }
  if (!missing.empty() || !extra.empty()) {
    std::string message = "weights do not match the lattice points of the polygon:";
    if (!missing.empty()) message += " missing " + join(missing) + ";";
    if (!extra.empty()) message += " not lattice points " + join(extra) + ";";
    message.pop_back();
    throw std::invalid_argument(message);
  }

  std::vector<WeightedPoint> points;
  points.reserve(lattice.size());
  for (const auto& p : lattice) points.push_back({p, weights.at(p)});
  return NewtonDiagram::from_points(std::move(points));
}

CentralWeights central_weights(const NewtonDiagram& diagram) {
  const Rational mean = diagram.mean_weight();
  CentralWeights out;
  out.a.reserve(diagram.size());
  for (const auto& pt : diagram.points()) out.a.push_back(pt.q - mean);
  return out;
}

Rational trivial_slope_term(const NewtonDiagram& diagram) { return 2 * diagram.mean_weight(); }

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<LatticePoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::int64_t doubled_hull_area(std::vector<LatticePoint> points) {
  const auto hull = convex_hull(std::move(points));
  if (hull.size() < 3) return 0;
  return signed_doubled_area(hull);
}

}  // namespace toricslope
