#include "toricslope/slope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toricslope {

std::vector<std::size_t> canonical_members(const Face& face, const NewtonDiagram& diagram) {
  std::vector<std::size_t> members = face.member_indices;
  std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
    return ScanlineLess{}(diagram[a].exponent, diagram[b].exponent);
  });
  return members;
}

FaceContribution face_contribution(const Face& face, const NewtonDiagram& diagram, double rel_tol) {
  FaceContribution out{face, {}, 0.0, 0.0};
  if (face.trivial()) return out;

  const auto members = canonical_members(face, diagram);
  std::vector<ExponentPair> pairs;
  pairs.reserve(members.size());
  for (auto idx : members) pairs.push_back(diagram[idx].exponent);

  std::map<std::pair<std::int64_t, std::int64_t>, QuadratureResult> cache;
  double sum = 0.0;
  double err = 0.0;
  for (const auto& sel : enumerate_selections(pairs)) {
    FaceIntegralSpec spec{sel.sum_p, sel.sum_r, pairs, 4};
    if (!convergence_check(spec)) {
      throw std::logic_error("selection with exponent sums (" + std::to_string(sel.sum_p) + ", " +
                             std::to_string(sel.sum_r) +
                             ") fails the convergence test; face membership is inconsistent");
    }
    const auto key = std::make_pair(sel.sum_p, sel.sum_r);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, face_integral(spec, rel_tol)).first;

    SelectionTerm term{sel, it->second, 0.0};
    for (auto& idx : term.selection.indices) idx = members[idx];
    const double weight = to_double(sel.d4);
    term.weighted = weight * term.integral.value;
    sum += term.weighted;
    err += weight * term.integral.abs_error_estimate;
    out.terms.push_back(std::move(term));
  }
  const double scale = 16.0 * to_double(face.offset);
  out.subtotal = scale * sum;
  out.error_bound = scale * err;
  return out;
}

SlopeReport compute_slope(const NewtonDiagram& diagram, double rel_tol) {
  if (diagram.volume() <= 0) throw std::invalid_argument("diagram exponents span no area; volume must be positive");

  const auto polytope = lower_hull(diagram);
  SlopeReport report;
  report.trivial_term = trivial_slope_term(diagram);
  if (diagram.shift() != 0) {
    report.diagnostics.push_back("weights shifted by -" + to_string(diagram.shift()) + " so that min q = 0");
  }

  const double prefactor = 1.0 / (3.0 * to_double(diagram.volume()));
  double total = 0.0;
  double err = 0.0;
  for (const auto& face : polytope.faces) {
    auto contribution = face_contribution(face, diagram, rel_tol);
    if (face.trivial()) {
      report.diagnostics.push_back("face with normal (" + to_string(face.normal_a) + ", " +
                                   to_string(face.normal_b) + ", 1) dropped: offset 0");
    }
    total += contribution.subtotal;
    err += contribution.error_bound;
    report.per_face.push_back(std::move(contribution));
  }
  report.nontrivial_total = prefactor * total;
  report.error_bound = prefactor * err;
  report.mu = to_double(report.trivial_term) - report.nontrivial_total;
  return report;
}

}  // namespace toricslope
