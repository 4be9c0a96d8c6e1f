#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

namespace secgraph::cli {

inline constexpr const char* kVersion = "0.3.0";

/// Every parameter a command can read. The worker count is deliberately
/// absent: it changes scheduling, never results.
struct ExperimentConfig {
  std::string command;
  std::string quantity;  ///< analytic
  double lambda = 0.2;
  double r = 1.0;  ///< may be +inf
  double side = 100.0;
  int n = 0;
  std::vector<double> p;
  int runs = 30;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;  ///< destination only; not part of the canonical form
  std::string placement = "midpoints";
  std::string rule = "analogy";
  std::string ball = "open";
  std::string direction = "lambda_c";
  std::vector<double> grid;
  std::vector<double> ladder;
  int n_max = 30;
  int bins = 40;
  double eps = 0.01;
  double x = 0.0;
  double power = 1.0;
  double theta = 1.0;
  double noise = 1.0;
  double alpha = 2.0;
  double shell = std::numeric_limits<double>::quiet_NaN();  ///< NaN: default width
  bool estimate = false;
  std::string batch;

  friend bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);
};

/// Canonical form: sorted keys, +inf as "inf", unset shell as null. Equality
/// compares canonical forms.
nlohmann::json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);

/// One-line header embedded in every output: {"config": ..., "version": ...}.
std::string header_json(const ExperimentConfig& c);

/// Recovers the config from an output produced by a command (CSV comment
/// line or JSON document).
ExperimentConfig config_from_output(const std::string& text);

}  // namespace secgraph::cli
