#pragma once

#include <string>
#include <vector>

#include "toricslope/diagram.hpp"
#include "toricslope/polytope.hpp"
#include "toricslope/quadrature.hpp"
#include "toricslope/symbols.hpp"

namespace toricslope {

struct SelectionTerm {
  IndexSelection selection;  ///< indices are diagram indices
  QuadratureResult integral;
  double weighted = 0.0;  ///< D4 * I
};

/// Contribution 16 d_c sum D4 I of one face.
struct FaceContribution {
  Face face;
  std::vector<SelectionTerm> terms;
  double subtotal = 0.0;
  double error_bound = 0.0;
};

struct SlopeReport {
  Rational trivial_term;          ///< 2 mean(q)
  double nontrivial_total = 0.0;  ///< (1 / 3V) sum_faces subtotal
  double mu = 0.0;
  double error_bound = 0.0;  ///< accumulated quadrature error on mu
  std::vector<FaceContribution> per_face;
  std::vector<std::string> diagnostics;
};

/// Face members in canonical (scanline) order of their exponents.
std::vector<std::size_t> canonical_members(const Face& face, const NewtonDiagram& diagram);

/// Integrates every surviving selection on the face. Faces with d = 0 are
/// returned with an empty term list. Throws std::logic_error when a selection
/// fails the convergence test, NumericalError on quadrature failure.
FaceContribution face_contribution(const Face& face, const NewtonDiagram& diagram, double rel_tol = 1e-10);

/// mu = 2 mean(q) - (1 / 3V) sum_faces 16 d_c sum D4 I.
SlopeReport compute_slope(const NewtonDiagram& diagram, double rel_tol = 1e-10);

}  // namespace toricslope
