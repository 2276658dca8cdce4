#include "toricslope/report.hpp"

#include <charconv>
#include <cmath>

namespace toricslope {

namespace {

nlohmann::ordered_json pair_json(const LatticePoint& p) { return {p.x(), p.y()}; }

nlohmann::ordered_json fit_json(const SlopeFit& fit) {
  return {{"slope", fit.slope}, {"stderr", fit.stderr_estimate}, {"non_monotone", fit.non_monotone}};
}

std::vector<std::pair<double, double>> series(const std::vector<FunctionalSample>& samples,
                                              double (*pick)(const FunctionalSample&)) {
  std::vector<std::pair<double, double>> out;
  for (const auto& s : samples) out.emplace_back(s.u, pick(s));
  return out;
}

std::string csv_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace

OracleResult run_oracle(const NewtonDiagram& diagram, std::span<const double> u_grid,
                        const FunctionalQuadrature& quad) {
  OracleResult out;
  out.samples = sample_functional(diagram, u_grid, quad);
  out.f0_fit = slope_fit(series(out.samples, [](const FunctionalSample& s) { return s.f0; }));
  out.j_fit = slope_fit(series(out.samples, [](const FunctionalSample& s) { return s.j; }));
  out.mixed_fit[0] = slope_fit(series(out.samples, [](const FunctionalSample& s) { return s.mixed[0]; }));
  out.mixed_fit[1] = slope_fit(series(out.samples, [](const FunctionalSample& s) { return s.mixed[1]; }));
  out.mixed_fit[2] = slope_fit(series(out.samples, [](const FunctionalSample& s) { return s.mixed[2]; }));
  return out;
}

nlohmann::ordered_json diagram_json(const NewtonDiagram& diagram) {
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const auto& pt : diagram.points()) {
    points.push_back({{"point", pair_json(pt.exponent)}, {"q", to_string(pt.q)}});
  }
  return {{"points", points},
          {"volume", to_string(diagram.volume())},
          {"weight_shift", to_string(diagram.shift())},
          {"mean_weight", to_string(diagram.mean_weight())}};
}

nlohmann::ordered_json formula_json(const SlopeReport& report) {
  nlohmann::ordered_json faces = nlohmann::ordered_json::array();
  for (const auto& fc : report.per_face) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : fc.terms) {
      terms.push_back({{"indices", t.selection.indices},
                       {"d4", to_string(t.selection.d4)},
                       {"sum_p", t.selection.sum_p},
                       {"sum_r", t.selection.sum_r},
                       {"integral", t.integral.value},
                       {"integral_error", t.integral.abs_error_estimate},
                       {"weighted", t.weighted}});
    }
    faces.push_back({{"normal", {to_string(fc.face.normal_a), to_string(fc.face.normal_b)}},
                     {"offset", to_string(fc.face.offset)},
                     {"members", fc.face.member_indices},
                     {"trivial", fc.face.trivial()},
                     {"terms", terms},
                     {"subtotal", fc.subtotal},
                     {"error_bound", fc.error_bound}});
  }
  return {{"trivial_term", to_string(report.trivial_term)},
          {"trivial_term_value", to_double(report.trivial_term)},
          {"nontrivial_total", report.nontrivial_total},
          {"mu", report.mu},
          {"error_bound", report.error_bound},
          {"faces", faces},
          {"diagnostics", report.diagnostics}};
}

nlohmann::ordered_json oracle_json(const OracleResult& oracle) {
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& s : oracle.samples) {
    table.push_back({{"u", s.u},
                     {"F0", s.f0},
                     {"J", s.j},
                     {"mixed", s.mixed},
                     {"half_volume", {s.half_volume_uu, s.half_volume_0u, s.half_volume_00}},
                     {"half_width", s.half_width},
                     {"tail_estimate", s.tail_estimate},
                     {"error_estimate", s.error_estimate},
                     {"evaluations", s.evaluations}});
  }
  return {{"samples", table},
          {"F0_slope", fit_json(oracle.f0_fit)},
          {"J_slope", fit_json(oracle.j_fit)},
          {"mixed_slopes",
           {fit_json(oracle.mixed_fit[0]), fit_json(oracle.mixed_fit[1]), fit_json(oracle.mixed_fit[2])}}};
}

nlohmann::ordered_json comparison_json(const SlopeReport& report, const OracleResult& oracle) {
  const double mu = report.mu;
  const double fitted = oracle.f0_fit.slope;
  const double gap = std::abs(fitted - mu);
  const double rel = gap / std::max(std::abs(mu), 1e-300);
  const double trivial = to_double(report.trivial_term);
  const double mixed_gap =
      std::max(std::abs(oracle.mixed_fit[1].slope - trivial), std::abs(oracle.mixed_fit[2].slope - trivial));
  return {{"formula_mu", mu},
          {"oracle_slope", fitted},
          {"absolute_gap", gap},
          {"relative_gap", rel},
          {"tolerance", kAgreementTolerance},
          {"agree", rel <= kAgreementTolerance},
          {"lowest_weight_slope", trivial},
          {"mixed_slope_gap", mixed_gap},
          {"mixed_agree", mixed_gap <= kAgreementTolerance * std::max(std::abs(trivial), 1e-300)}};
}

void write_csv(std::ostream& out, const std::vector<FunctionalSample>& samples) {
  out << "u,F0,J,mixed_i0,mixed_i1,mixed_i2\n";
  for (const auto& s : samples) {
    out << csv_number(s.u) << ',' << csv_number(s.f0) << ',' << csv_number(s.j) << ',' << csv_number(s.mixed[0])
        << ',' << csv_number(s.mixed[1]) << ',' << csv_number(s.mixed[2]) << '\n';
  }
}

}  // namespace toricslope
