#pragma once

#include <ostream>

#include <json.hpp>

#include "toricslope/config.hpp"

namespace toricslope {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3 };

struct RunResult {
  int exit_code = kExitOk;
  nlohmann::ordered_json report;  ///< empty on failure
  nlohmann::ordered_json error;   ///< {"error": kind, "field": ..., "message": ...} on failure
};

/// Builds the diagram, runs the requested modes and writes the report and CSV
/// files named in the config. Progress goes to `log` when non-null.
RunResult run(const RunConfig& config, std::ostream* log = nullptr);

}  // namespace toricslope
