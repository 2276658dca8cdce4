#include "toricslope/run.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "toricslope/errors.hpp"
#include "toricslope/report.hpp"

namespace toricslope {

namespace {

nlohmann::ordered_json error_json(const std::string& kind, const std::string& field, const std::string& message) {
  return {{"error", kind}, {"field", field}, {"message", message}};
}

void write_file(const std::string& path, const std::string& body, const std::string& field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(field, "cannot open " + path + " for writing");
  out << body;
  if (!out) throw ConfigError(field, "failed writing " + path);
}

}  // namespace

RunResult run(const RunConfig& config, std::ostream* log) {
  RunResult result;
  try {
    validate(config);
    std::optional<LatticePolygon> polygon;
    try {
      polygon.emplace(config.polygon_vertices);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("polygon_vertices", std::string("polygon_vertices: ") + e.what());
    }
    std::optional<NewtonDiagram> diagram;
    try {
      diagram.emplace(build_diagram(*polygon, config.weights));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("weights", std::string("weights: ") + e.what());
    }
    for (const auto& w : config.warnings) {
      if (log) *log << "warning: " << w << '\n';
    }

    nlohmann::ordered_json report;
    report["config"] = to_json(config);
    report["warnings"] = config.warnings;
    report["diagram"] = diagram_json(*diagram);

    std::optional<SlopeReport> formula;
    if (runs_formula(config.mode)) {
      if (log) *log << "formula: integrating face selections\n";
      formula = compute_slope(*diagram, config.rel_tol);
      report["formula"] = formula_json(*formula);
      if (log) *log << "formula: mu = " << formula->mu << '\n';
    }
    std::optional<OracleResult> oracle;
    if (runs_oracle(config.mode)) {
      if (log) *log << "oracle: sampling " << config.u_grid.size() << " values of u\n";
      FunctionalQuadrature quad;
      quad.rel_tol = std::max(quad.rel_tol, config.rel_tol);
      oracle = run_oracle(*diagram, config.u_grid, quad);
      report["oracle"] = oracle_json(*oracle);
      if (log) *log << "oracle: fitted slope = " << oracle->f0_fit.slope << '\n';
    }
    if (formula && oracle) {
      report["comparison"] = comparison_json(*formula, *oracle);
      if (log) *log << "comparison: agree = " << report["comparison"]["agree"].get<bool>() << '\n';
    }

    if (config.out) write_file(*config.out, report.dump(2) + "\n", "out");
    if (config.csv && oracle) {
      std::ostringstream csv;
      write_csv(csv, oracle->samples);
      write_file(*config.csv, csv.str(), "csv");
    }
    result.report = std::move(report);
  } catch (const ConfigError& e) {
    result.exit_code = kExitConfig;
    result.error = error_json("config", e.field(), e.what());
  } catch (const NumericalError& e) {
    result.exit_code = kExitNumerical;
    result.error = error_json("numerical", "", e.what());
    result.error["best_estimate"] = e.best_estimate();
  } catch (const std::invalid_argument& e) {
    result.exit_code = kExitConfig;
    result.error = error_json("config", "", e.what());
  } catch (const std::exception& e) {
    result.exit_code = kExitNumerical;
    result.error = error_json("numerical", "", e.what());
  }
  return result;
}

}  // namespace toricslope
