#include "experiment_config.hpp"

#include <cmath>

#include "secgraph/error.hpp"

namespace secgraph::cli {

namespace {

using nlohmann::json;

json real_to_json(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ParameterError("bad real in config: " + s);
  }
  return j.get<double>();
}

bool same_real(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

}  // namespace

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return to_json(a) == to_json(b) && same_real(a.shell, b.shell);
}

json to_json(const ExperimentConfig& c) {
  return json{
      {"command", c.command},     {"quantity", c.quantity},
      {"lambda", real_to_json(c.lambda)}, {"r", real_to_json(c.r)},
      {"L", real_to_json(c.side)}, {"n", c.n},
      {"p", c.p},                 {"runs", c.runs},
      {"seed", c.seed},           {"format", c.format},
      {"placement", c.placement},
      {"rule", c.rule},           {"ball", c.ball},
      {"direction", c.direction}, {"grid", c.grid},
      {"ladder", c.ladder},       {"n_max", c.n_max},
      {"bins", c.bins},           {"eps", real_to_json(c.eps)},
      {"x", real_to_json(c.x)},   {"power", real_to_json(c.power)},
      {"theta", real_to_json(c.theta)}, {"noise", real_to_json(c.noise)},
      {"alpha", real_to_json(c.alpha)}, {"shell", real_to_json(c.shell)},
      {"estimate", c.estimate},   {"batch", c.batch},
  };
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  c.command = j.at("command").get<std::string>();
  c.quantity = j.at("quantity").get<std::string>();
  c.lambda = real_from_json(j.at("lambda"));
  c.r = real_from_json(j.at("r"));
  c.side = real_from_json(j.at("L"));
  c.n = j.at("n").get<int>();
  c.p = j.at("p").get<std::vector<double>>();
  c.runs = j.at("runs").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.format = j.at("format").get<std::string>();
  c.placement = j.at("placement").get<std::string>();
  c.rule = j.at("rule").get<std::string>();
  c.ball = j.at("ball").get<std::string>();
  c.direction = j.at("direction").get<std::string>();
  c.grid = j.at("grid").get<std::vector<double>>();
  c.ladder = j.at("ladder").get<std::vector<double>>();
  c.n_max = j.at("n_max").get<int>();
  c.bins = j.at("bins").get<int>();
  c.eps = real_from_json(j.at("eps"));
  c.x = real_from_json(j.at("x"));
  c.power = real_from_json(j.at("power"));
  c.theta = real_from_json(j.at("theta"));
  c.noise = real_from_json(j.at("noise"));
  c.alpha = real_from_json(j.at("alpha"));
  c.shell = real_from_json(j.at("shell"));
  c.estimate = j.at("estimate").get<bool>();
  c.batch = j.at("batch").get<std::string>();
  return c;
}

std::string header_json(const ExperimentConfig& c) {
  return json{{"config", to_json(c)}, {"version", kVersion}}.dump();
}

ExperimentConfig config_from_output(const std::string& text) {
  json doc;
  if (text.rfind("# ", 0) == 0) {
    const auto eol = text.find('\n');
    doc = json::parse(text.substr(2, eol == std::string::npos ? std::string::npos : eol - 2));
  } else {
    doc = json::parse(text);
  }
  if (!doc.contains("config")) throw ParameterError("output carries no embedded config");
  return config_from_json(doc.at("config"));
}

}  // namespace secgraph::cli
