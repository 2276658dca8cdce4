#pragma once

// Shared configurations and independent oracles for the test suites.

#include <vector>

#include "toricslope/diagram.hpp"

namespace fixtures {

using toricslope::LatticePoint;
using toricslope::LatticePolygon;
using toricslope::NewtonDiagram;
using toricslope::Rational;
using toricslope::WeightMap;

inline Rational Q(const char* text) { return toricslope::parse_rational(text); }

inline LatticePolygon triangle() { return LatticePolygon({{0, 0}, {1, 0}, {0, 1}}); }

inline LatticePolygon hirzebruch() { return LatticePolygon({{0, 0}, {2, 0}, {1, 1}, {0, 1}}); }

/// Weights (1, q, 0) at (0,0), (0,1), (1,0).
inline NewtonDiagram projective_plane(const Rational& q) {
  WeightMap w;
  w[LatticePoint(0, 0)] = 1;
  w[LatticePoint(1, 0)] = 0;
  w[LatticePoint(0, 1)] = q;
  return toricslope::build_diagram(triangle(), w);
}

/// Weights in the order (q00, q10, q20, q01, q11).
inline NewtonDiagram hirzebruch_diagram(const Rational& q00, const Rational& q10, const Rational& q20,
                                        const Rational& q01, const Rational& q11) {
  WeightMap w;
  w[LatticePoint(0, 0)] = q00;
  w[LatticePoint(1, 0)] = q10;
  w[LatticePoint(2, 0)] = q20;
  w[LatticePoint(0, 1)] = q01;
  w[LatticePoint(1, 1)] = q11;
  return toricslope::build_diagram(hirzebruch(), w);
}

inline NewtonDiagram hirzebruch_single_face() {
  return hirzebruch_diagram(1, Q("1/2"), 0, Q("1/2"), 0);
}

inline NewtonDiagram hirzebruch_case1() { return hirzebruch_diagram(1, Q("1/4"), 0, Q("7/8"), 0); }

/// Case-1 closed form (-2(q00+q10) + 18(q01+q11)) / 45.
inline Rational hirzebruch_case1_mu(const Rational& q00, const Rational& q10, const Rational& q01,
                                    const Rational& q11) {
  return (-2 * (q00 + q10) + 18 * (q01 + q11)) / 45;
}

}  // namespace fixtures
