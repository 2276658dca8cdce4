#include "toricslope/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "toricslope/errors.hpp"

namespace toricslope {

namespace {

LatticePoint parse_pair(const nlohmann::json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number_integer() || !node[1].is_number_integer()) {
    throw ConfigError(field, field + ": expected an integer pair [p, r]");
  }
  return LatticePoint(node[0].get<std::int64_t>(), node[1].get<std::int64_t>());
}

// Shortest round-trip decimal of a double, read back as an exact rational.
Rational rational_from_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::formula: return "formula";
    case Mode::oracle: return "oracle";
    case Mode::both: return "both";
  }
  return "formula";
}

Mode parse_mode(const std::string& text) {
  if (text == "formula") return Mode::formula;
  if (text == "oracle") return Mode::oracle;
  if (text == "both") return Mode::both;
  throw ConfigError("mode", "mode: expected formula, oracle or both, got '" + text + "'");
}

bool RunConfig::operator==(const RunConfig& other) const {
  return polygon_vertices == other.polygon_vertices && weights == other.weights && mode == other.mode &&
         rel_tol == other.rel_tol && u_grid == other.u_grid && out == other.out && csv == other.csv;
}

RunConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("", "configuration must be a JSON object");
  static const std::vector<std::string> known{"polygon_vertices", "weights", "mode", "rel_tol", "u_grid", "out", "csv"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(key, "unknown configuration key '" + key + "'");
    }
  }

  RunConfig config;
  if (!doc.contains("polygon_vertices") || !doc["polygon_vertices"].is_array()) {
    throw ConfigError("polygon_vertices", "polygon_vertices: required array of [p, r] pairs");
  }
  for (std::size_t k = 0; k < doc["polygon_vertices"].size(); ++k) {
    config.polygon_vertices.push_back(
        parse_pair(doc["polygon_vertices"][k], "polygon_vertices[" + std::to_string(k) + "]"));
  }

  if (!doc.contains("weights") || !doc["weights"].is_array()) {
    throw ConfigError("weights", "weights: required array of {\"point\": [p, r], \"q\": ...}");
  }
  for (std::size_t k = 0; k < doc["weights"].size(); ++k) {
    const auto& entry = doc["weights"][k];
    const std::string field = "weights[" + std::to_string(k) + "]";
    if (!entry.is_object() || !entry.contains("point") || !entry.contains("q")) {
      throw ConfigError(field, field + ": expected {\"point\": [p, r], \"q\": ...}");
    }
    const LatticePoint point = parse_pair(entry["point"], field + ".point");
    Rational q;
    const auto& qn = entry["q"];
    if (qn.is_string()) {
      try {
        q = parse_rational(qn.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(field + ".q", field + ".q: " + e.what());
      }
    } else if (qn.is_number()) {
      const double v = qn.get<double>();
      if (!std::isfinite(v)) throw ConfigError(field + ".q", field + ".q: weight must be finite");
      q = rational_from_number(v);
      if (!is_dyadic(q)) {
        config.warnings.push_back(field + ".q: number " + format_double(v) + " read as " + to_string(q) +
                                  "; quote rationals as strings for exact input");
      }
    } else {
      throw ConfigError(field + ".q", field + ".q: expected a rational string or a number");
    }
    if (q < 0) throw ConfigError(field + ".q", field + ".q: weight must be nonnegative");
    if (!config.weights.emplace(point, q).second) {
      throw ConfigError(field + ".point", field + ".point: duplicate weight for " + to_string(point));
    }
  }

  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ConfigError("mode", "mode: expected a string");
    config.mode = parse_mode(doc["mode"].get<std::string>());
  }
  if (doc.contains("rel_tol")) {
    if (!doc["rel_tol"].is_number()) throw ConfigError("rel_tol", "rel_tol: expected a number");
    config.rel_tol = doc["rel_tol"].get<double>();
  }
  if (doc.contains("u_grid")) {
    const auto& grid = doc["u_grid"];
    if (!grid.is_array()) throw ConfigError("u_grid", "u_grid: expected an array of numbers");
    config.u_grid.clear();
    for (const auto& u : grid) {
      if (!u.is_number()) throw ConfigError("u_grid", "u_grid: expected an array of numbers");
      config.u_grid.push_back(u.get<double>());
    }
  }
  for (const char* key : {"out", "csv"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_string()) throw ConfigError(key, std::string(key) + ": expected a path string");
    (std::string(key) == "out" ? config.out : config.csv) = doc[key].get<std::string>();
  }
  validate(config);
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read configuration file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

nlohmann::ordered_json to_json(const RunConfig& config) {
  nlohmann::ordered_json doc;
  doc["polygon_vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : config.polygon_vertices) doc["polygon_vertices"].push_back({v.x(), v.y()});
  doc["weights"] = nlohmann::ordered_json::array();
  for (const auto& [point, q] : config.weights) {
    doc["weights"].push_back({{"point", {point.x(), point.y()}}, {"q", to_string(q)}});
  }
  doc["mode"] = to_string(config.mode);
  doc["rel_tol"] = config.rel_tol;
  doc["u_grid"] = config.u_grid;
  if (config.out) doc["out"] = *config.out;
  if (config.csv) doc["csv"] = *config.csv;
  return doc;
}

void validate(const RunConfig& config) {
  if (!(config.rel_tol > 0.0 && config.rel_tol < 1.0)) {
    throw ConfigError("rel_tol", "rel_tol: must lie in (0, 1)");
  }
  if (runs_oracle(config.mode)) {
    if (config.u_grid.size() < 3) throw ConfigError("u_grid", "u_grid: oracle mode needs at least 3 values");
    for (std::size_t k = 0; k < config.u_grid.size(); ++k) {
      if (!std::isfinite(config.u_grid[k]) || config.u_grid[k] < 0.0) {
        throw ConfigError("u_grid", "u_grid: values must be finite and nonnegative");
      }
      if (k > 0 && !(config.u_grid[k] > config.u_grid[k - 1])) {
        throw ConfigError("u_grid", "u_grid: must be strictly increasing");
      }
    }
    if (config.u_grid.back() < 8.0) throw ConfigError("u_grid", "u_grid: largest value must be at least 8");
  }
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    while (first != last && *first == ' ') ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) throw ConfigError("u_grid", "u_grid: cannot parse '" + item + "'");
    grid.push_back(v);
  }
  if (grid.empty()) throw ConfigError("u_grid", "u_grid: empty list");
  return grid;
}

}  // namespace toricslope
