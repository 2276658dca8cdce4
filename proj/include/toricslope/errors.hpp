#pragma once

#include <stdexcept>
#include <string>

namespace toricslope {

/// Invalid user input. `field` names the offending configuration key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A numerical routine failed to meet its contract (divergence, budget
/// exhausted, tail too heavy). Carries the best available estimate.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& message, double best_estimate = 0.0)
      : std::runtime_error(message), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace toricslope
