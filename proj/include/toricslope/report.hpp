#pragma once

#include <array>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "toricslope/functional.hpp"
#include "toricslope/slope.hpp"

namespace toricslope {

/// Relative tolerance for declaring formula and oracle slopes in agreement.
inline constexpr double kAgreementTolerance = 2e-2;

struct OracleResult {
  std::vector<FunctionalSample> samples;
  SlopeFit f0_fit;
  SlopeFit j_fit;
  std::array<SlopeFit, 3> mixed_fit;  ///< indexed by i
};

/// Samples the functionals on the grid and fits every slope.
OracleResult run_oracle(const NewtonDiagram& diagram, std::span<const double> u_grid,
                        const FunctionalQuadrature& quad = {});

nlohmann::ordered_json diagram_json(const NewtonDiagram& diagram);
nlohmann::ordered_json formula_json(const SlopeReport& report);
nlohmann::ordered_json oracle_json(const OracleResult& oracle);
nlohmann::ordered_json comparison_json(const SlopeReport& report, const OracleResult& oracle);

/// Header "u,F0,J,mixed_i0,mixed_i1,mixed_i2", one row per sample.
void write_csv(std::ostream& out, const std::vector<FunctionalSample>& samples);

}  // namespace toricslope
