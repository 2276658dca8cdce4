#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "toricslope/diagram.hpp"

using namespace toricslope;
using fixtures::Q;

namespace {

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Pick's theorem: interior + boundary = A + B/2 + 1.
std::int64_t pick_count(const LatticePolygon& poly) {
  const auto& v = poly.vertices();
  std::int64_t boundary = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto d = v[(k + 1) % v.size()] - v[k];
    boundary += gcd_abs(d.x(), d.y());
  }
  // 2A + B + 2 over 2
  return (poly.doubled_area() + boundary + 2) / 2;
}

std::vector<LatticePoint> pts(std::initializer_list<std::pair<int, int>> list) {
  std::vector<LatticePoint> out;
  for (auto [p, r] : list) out.emplace_back(p, r);
  return out;
}

}  // namespace

TEST_CASE("lattice points of the unit triangle") {
  const auto points = enumerate_lattice_points(fixtures::triangle());
  CHECK(points == pts({{0, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("lattice points of the Hirzebruch quadrilateral follow P0..P4") {
  const auto points = enumerate_lattice_points(fixtures::hirzebruch());
  CHECK(points == pts({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}}));
}

TEST_CASE("doubled triangle includes edge midpoints") {
  const auto points = enumerate_lattice_points(LatticePolygon(pts({{0, 0}, {2, 0}, {0, 2}})));
  CHECK(points.size() == 6);
  for (const auto& p : pts({{1, 0}, {0, 1}, {1, 1}})) {
    CHECK(std::find(points.begin(), points.end(), p) != points.end());
  }
}

TEST_CASE("polygon volumes") {
  CHECK(polygon_volume(fixtures::triangle()) == 1);
  CHECK(polygon_volume(fixtures::hirzebruch()) == 3);
  CHECK(polygon_volume(LatticePolygon(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}))) == 2);
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_WITH(LatticePolygon(pts({{0, 0}, {1, 0}, {2, 0}})), doctest::Contains("polygon has no interior"));
  CHECK_THROWS_AS(LatticePolygon(pts({{1, 1}, {2, 1}, {1, 2}})), std::invalid_argument);   // misses the origin
  CHECK_THROWS_AS(LatticePolygon(pts({{0, 0}, {-1, 0}, {0, 1}})), std::invalid_argument);  // leaves the quadrant
  CHECK_THROWS_AS(LatticePolygon(pts({{0, 0}, {1, 0}, {1, 0}, {0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(LatticePolygon(pts({{0, 0}, {1, 0}, {2, 0}, {0, 1}})), std::invalid_argument);  // collinear run
  // clockwise input is reoriented
  const LatticePolygon cw(pts({{0, 0}, {0, 1}, {1, 0}}));
  CHECK(cw.doubled_area() == 1);
}

TEST_CASE("lattice point count matches Pick's theorem on random polygons") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(0, 9);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    std::vector<LatticePoint> cloud{LatticePoint(0, 0)};
    for (int k = 0; k < 6; ++k) cloud.emplace_back(coord(rng), coord(rng));
    const auto hull = convex_hull(cloud);
    if (hull.size() < 3) continue;
    const LatticePolygon poly(hull);
    CHECK(static_cast<std::int64_t>(enumerate_lattice_points(poly).size()) == pick_count(poly));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("build_diagram on the projective plane") {
  const auto d = fixtures::projective_plane(Q("1/2"));
  REQUIRE(d.size() == 3);
  CHECK(d.volume() == 1);
  CHECK(d[0].q == 1);
  CHECK(d[1].q == 0);
  CHECK(d[2].q == Q("1/2"));
}

TEST_CASE("uniform weights normalize to the trivial configuration") {
  WeightMap five, zero;
  for (const auto& p : enumerate_lattice_points(fixtures::hirzebruch())) {
    five[p] = 5;
    zero[p] = 0;
  }
  const auto a = build_diagram(fixtures::hirzebruch(), five);
  const auto b = build_diagram(fixtures::hirzebruch(), zero);
  CHECK(a.shift() == 5);
  CHECK(b.shift() == 0);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].q == b[k].q);
  for (const auto& x : central_weights(b).a) CHECK(x == 0);
}

TEST_CASE("build_diagram rejects missing, extra and negative weights") {
  WeightMap w;
  w[LatticePoint(0, 0)] = 1;
  w[LatticePoint(1, 0)] = 0;
  CHECK_THROWS_WITH(build_diagram(fixtures::triangle(), w), doctest::Contains("(0,1)"));
  w[LatticePoint(0, 1)] = 0;
  w[LatticePoint(3, 3)] = 0;
  CHECK_THROWS_WITH(build_diagram(fixtures::triangle(), w), doctest::Contains("(3,3)"));
  w.erase(LatticePoint(3, 3));
  w[LatticePoint(0, 1)] = -1;
  CHECK_THROWS_AS(build_diagram(fixtures::triangle(), w), std::invalid_argument);
}

TEST_CASE("from_points rejects repeated exponents") {
  std::vector<WeightedPoint> p{{LatticePoint(0, 0), 1}, {LatticePoint(1, 0), 0}, {LatticePoint(0, 0), 2}};
  CHECK_THROWS_AS(NewtonDiagram::from_points(p), std::invalid_argument);
}

TEST_CASE("central weights") {
  SUBCASE("projective plane") {
    for (const char* q : {"0", "1/4", "1", "3/2", "2"}) {
      const auto d = fixtures::projective_plane(Q(q));
      CHECK(trivial_slope_term(d) == 2 * (1 + Q(q)) / 3);
    }
  }
  SUBCASE("Hirzebruch lowest weight term is 2 sum q / 5") {
    const auto d = fixtures::hirzebruch_diagram(3, 1, 0, Q("5/2"), Q("1/3"));
    CHECK(trivial_slope_term(d) == 2 * (3 + 1 + Q("5/2") + Q("1/3")) / 5);
  }
}

TEST_CASE("central weight invariants on random diagrams") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(0, 40), den(1, 12);
  const auto lattice = enumerate_lattice_points(LatticePolygon(pts({{0, 0}, {3, 0}, {2, 2}, {0, 1}})));
  for (int trial = 0; trial < 200; ++trial) {
    WeightMap w;
    for (const auto& p : lattice) w[p] = Rational(num(rng), den(rng));
    const auto d = build_diagram(LatticePolygon(pts({{0, 0}, {3, 0}, {2, 2}, {0, 1}})), w);
    const auto c = central_weights(d);
    Rational sum = 0;
    for (const auto& x : c.a) sum += x;
    CHECK(sum == 0);
    CHECK(-2 * c.min() == 2 * d.mean_weight());
    Rational min_q = d[0].q;
    for (std::size_t k = 0; k < d.size(); ++k) {
      CHECK(c.a[k] - c.min() == d[k].q);
      min_q = std::min(min_q, d[k].q);
    }
    CHECK(min_q == 0);
    // reconstructing the normalized weights from a is the identity
    WeightMap back;
    for (std::size_t k = 0; k < d.size(); ++k) back[d[k].exponent] = c.a[k] - c.min();
    const auto again = build_diagram(LatticePolygon(pts({{0, 0}, {3, 0}, {2, 2}, {0, 1}})), back);
    for (std::size_t k = 0; k < d.size(); ++k) CHECK(again[k].q == d[k].q);
  }
}
