// Batch front end: reads a JSON configuration, runs the slope formula and/or
// the direct numerical oracle, and writes a JSON report (stdout or --out).

#include <iostream>

#include <CLI11.hpp>

#include "toricslope/errors.hpp"
#include "toricslope/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic slope of the Aubin-Yau functional on toric surfaces"};

  std::string config_path;
  std::string mode;
  double rel_tol = 0.0;
  std::string u_grid;
  std::string out;
  std::string csv;
  bool verbose = false;

  app.add_option("--config", config_path, "JSON configuration file")->required();
  app.add_option("--mode", mode, "formula, oracle or both (overrides config)");
  app.add_option("--rel-tol", rel_tol, "relative quadrature tolerance (overrides config)");
  app.add_option("--u-grid", u_grid, "comma-separated u values for the oracle (overrides config)");
  app.add_option("--out", out, "report path (default: stdout)");
  app.add_option("--csv", csv, "CSV path for the oracle sample table");
  app.add_flag("--verbose", verbose, "progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : toricslope::kExitConfig;
  }

  toricslope::RunConfig config;
  try {
    config = toricslope::load_config(config_path);
    if (!mode.empty()) config.mode = toricslope::parse_mode(mode);
    if (app.count("--rel-tol") > 0) config.rel_tol = rel_tol;
    if (!u_grid.empty()) config.u_grid = toricslope::parse_grid(u_grid);
    if (!out.empty()) config.out = out;
    if (!csv.empty()) config.csv = csv;
    toricslope::validate(config);
  } catch (const toricslope::ConfigError& e) {
    nlohmann::ordered_json err{{"error", "config"}, {"field", e.field()}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return toricslope::kExitConfig;
  }

  const auto result = toricslope::run(config, verbose ? &std::cerr : nullptr);
  if (result.exit_code != toricslope::kExitOk) {
    std::cerr << result.error.dump() << '\n';
    return result.exit_code;
  }
  if (!config.out) std::cout << result.report.dump(2) << '\n';
  return toricslope::kExitOk;
}
