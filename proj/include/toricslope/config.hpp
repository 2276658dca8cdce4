#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricslope/diagram.hpp"

namespace toricslope {

enum class Mode { formula, oracle, both };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

inline bool runs_formula(Mode mode) { return mode != Mode::oracle; }
inline bool runs_oracle(Mode mode) { return mode != Mode::formula; }

struct RunConfig {
  std::vector<LatticePoint> polygon_vertices;
  WeightMap weights;
  Mode mode = Mode::formula;
  double rel_tol = 1e-10;
  std::vector<double> u_grid{8.0, 10.0, 12.0, 14.0, 16.0};
  std::optional<std::string> out;
  std::optional<std::string> csv;

  /// Non-fatal notes from parsing (inexact weights). Not serialized.
  std::vector<std::string> warnings;

  bool operator==(const RunConfig& other) const;
};

/// Throws ConfigError naming the offending key.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Weights are written as exact "p/q" strings so reparsing is lossless.
nlohmann::ordered_json to_json(const RunConfig& config);

/// Checks mode, rel_tol and u_grid invariants; throws ConfigError.
void validate(const RunConfig& config);

/// Parses "8,10,12" into a grid.
std::vector<double> parse_grid(const std::string& text);

}  // namespace toricslope
