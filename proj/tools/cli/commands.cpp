#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <variant>

#include "secgraph/analytics.hpp"
#include "secgraph/degree_experiment.hpp"
#include "secgraph/error.hpp"
#include "secgraph/lattice.hpp"
#include "secgraph/percolation.hpp"
#include "secgraph/point_process.hpp"
#include "secgraph/serialize.hpp"
#include "secgraph/stats.hpp"

namespace secgraph::cli {

namespace {

using nlohmann::json;
namespace an = secgraph::analytics;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  json summary = json::object();
};

json real_json(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return real_json(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string cell_csv(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

json header(const ExperimentConfig& cfg) { return json::parse(header_json(cfg)); }

std::string emit(const ExperimentConfig& cfg, const Table& t) {
  if (cfg.format == "json") {
    json doc = header(cfg);
    doc["summary"] = t.summary;
    doc["columns"] = t.columns;
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r = json::array();
      for (const auto& c : row) r.push_back(cell_json(c));
      rows.push_back(r);
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# " << header_json(cfg) << '\n';
  if (!t.summary.empty()) os << "# summary " << t.summary.dump() << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_csv(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string emit_json(const ExperimentConfig& cfg, json body) {
  json doc = header(cfg);
  doc.update(body);
  return doc.dump(2) + "\n";
}

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i)
    g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return g;
}

DegreeExperimentConfig degree_config(const ExperimentConfig& cfg, double lambda, unsigned workers) {
  DegreeExperimentConfig dc;
  dc.lambda = lambda;
  dc.r = cfg.r;
  dc.side = cfg.side;
  dc.runs = cfg.runs;
  dc.master_seed = cfg.seed;
  dc.workers = workers;
  return dc;
}

double pmf_at(const std::vector<double>& pmf, std::size_t k) { return k < pmf.size() ? pmf[k] : 0.0; }

// Analytic out-degree pmf, truncated once the remaining mass is negligible.
std::vector<double> analytic_out_pmf(const an::ModelParams& p, std::size_t min_len) {
  std::vector<double> pmf;
  double mass = 0.0;
  for (int k = 0; k < 100000; ++k) {
    pmf.push_back(an::out_degree_pmf(p, k));
    mass += pmf.back();
    if (pmf.size() >= min_len && 1.0 - mass < 1e-13) break;
  }
  return pmf;
}

CommandResult cmd_degrees(const ExperimentConfig& cfg, unsigned workers) {
  const auto ex = run_degree_experiment(degree_config(cfg, cfg.lambda, workers));
  const auto out = ex.pmf_out(), in = ex.pmf_in(), basic = ex.pmf_basic(), enh = ex.pmf_enhanced();
  const an::ModelParams model{cfg.lambda, cfg.r};
  const auto analytic = analytic_out_pmf(model, out.size());

  Table t;
  t.columns = {"n", "empirical_out", "empirical_in", "empirical_basic", "empirical_enhanced",
               "analytic_out", "poisson", "geometric"};
  const std::size_t rows =
      std::max({static_cast<std::size_t>(cfg.n_max) + 1, out.size(), in.size(), enh.size()});
  for (std::size_t k = 0; k < rows; ++k) {
    const int n = static_cast<int>(k);
    const double poisson = std::isfinite(cfg.r) ? an::out_degree_pmf({0.0, cfg.r}, n) : kNaN;
    const double geometric = cfg.lambda > 0.0 ? an::out_degree_pmf({cfg.lambda, kInf}, n) : kNaN;
    t.rows.push_back({static_cast<std::int64_t>(k), pmf_at(out, k), pmf_at(in, k), pmf_at(basic, k),
                      pmf_at(enh, k), pmf_at(analytic, k), poisson, geometric});
  }
  t.summary = {
      {"interior_nodes", ex.interior_nodes()},
      {"mean_out", stats::mean(ex.per_run_mean_out())},
      {"mean_in", stats::mean(ex.per_run_mean_in())},
      {"mean_basic", stats::mean(ex.per_run_mean_basic())},
      {"mean_enhanced", stats::mean(ex.per_run_mean_enhanced())},
      {"analytic_mean_out", an::mean_out_degree(model)},
      {"analytic_mean_basic", an::mean_basic_degree(model)},
      {"analytic_mean_enhanced", an::mean_enhanced_degree(model)},
      {"tv_out", stats::total_variation(out, analytic)},
      {"mean_identity_holds", ex.identity_holds()},
      {"degree_chain_holds", ex.chain_holds()},
  };
  return {emit(cfg, t), kOk, {}};
}

CommandResult cmd_isolation(const ExperimentConfig& cfg, unsigned workers) {
  const auto lambdas = cfg.grid.empty() ? std::vector<double>{cfg.lambda} : cfg.grid;
  Table t;
  t.columns = {"lambda", "r",  "nodes", "out", "out_se", "in", "in_se", "basic", "basic_se",
               "enhanced", "enhanced_se", "analytic_out", "analytic_basic", "ordering_ok"};
  bool all_ok = true;
  for (const double lambda : lambdas) {
    const auto ex = run_degree_experiment(degree_config(cfg, lambda, workers));
    const auto frac = [&](auto field) {
      std::vector<double> v;
      for (const auto& r : ex.runs) v.push_back(r.fraction_at(r.*field, 0));
      return v;
    };
    const auto out = frac(&RunDegrees::out), in = frac(&RunDegrees::in);
    const auto basic = frac(&RunDegrees::basic), enh = frac(&RunDegrees::enhanced);
    const auto se = [](const std::vector<double>& v) { return stats::standard_error(v); };
    const auto p0 = [](const std::vector<double>& pmf) { return pmf_at(pmf, 0); };
    const double f_out = p0(ex.pmf_out()), f_in = p0(ex.pmf_in()), f_enh = p0(ex.pmf_enhanced());
    // P[N' = 0] <= P[N_in = 0] <= P[N_out = 0], each step within 3 combined standard errors
    const bool ok = f_enh <= f_in + 3.0 * std::hypot(se(enh), se(in)) &&
                    f_in <= f_out + 3.0 * std::hypot(se(in), se(out));
    all_ok = all_ok && ok;
    t.rows.push_back({lambda, cfg.r, static_cast<std::int64_t>(ex.interior_nodes()), f_out, se(out),
                      f_in, se(in), p0(ex.pmf_basic()), se(basic), f_enh, se(enh),
                      an::out_isolation({lambda, cfg.r}),
                      std::isinf(cfg.r) ? an::basic_isolation(lambda) : kNaN,
                      static_cast<std::int64_t>(ok)});
  }
  t.summary = {{"ordering_holds", all_ok}};
  CommandResult res{emit(cfg, t), all_ok ? kOk : kPartial, {}};
  if (!all_ok) res.diagnostics = "isolation ordering violated on at least one row";
  return res;
}

CommandResult cmd_ratios(const ExperimentConfig& cfg) {
  const auto rs = cfg.grid.empty() ? log_grid(0.1, 10.0, 25) : cfg.grid;
  Table t;
  t.columns = {"lambda", "r", "eta", "eta_prime", "eta_over_eta_prime", "floor"};
  bool monotone = true;
  double prev_eta = kInf, prev_eta_p = kInf;
  for (const double r : rs) {
    const auto s = an::secrecy_ratios({cfg.lambda, r});
    monotone = monotone && s.eta <= prev_eta && s.eta_prime <= prev_eta_p;
    prev_eta = s.eta;
    prev_eta_p = s.eta_prime;
    t.rows.push_back({cfg.lambda, r, s.eta, s.eta_prime, s.eta / s.eta_prime,
                      an::basic_to_enhanced_floor()});
  }
  t.summary = {{"monotone_in_r", monotone}};
  return {emit(cfg, t), kOk, {}};
}

CommandResult cmd_edges(const ExperimentConfig& cfg, unsigned workers) {
  detail::require(cfg.bins >= 1, "bins must be >= 1");
  auto dc = degree_config(cfg, cfg.lambda, workers);
  dc.collect_lengths = true;
  const auto ex = run_degree_experiment(dc);
  const auto& len = ex.lengths;
  const bool has_rayleigh = cfg.lambda > 0.0;
  const bool has_disk = std::isfinite(cfg.r);

  double hi = has_disk ? cfg.r : (len.empty() ? 1.0 : stats::quantile(len, 0.999));
  if (hi <= 0.0) hi = 1.0;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cfg.bins), 0);
  for (const double l : len) {
    const auto b = static_cast<std::size_t>(std::min(l / hi * cfg.bins, cfg.bins - 1.0));
    if (l <= hi) ++counts[b];
  }
  Table t;
  t.columns = {"bin_lo", "bin_hi", "count", "empirical_density", "rayleigh_density", "disk_density"};
  const double width = hi / cfg.bins;
  for (int b = 0; b < cfg.bins; ++b) {
    const double lo = b * width, mid = (b + 0.5) * width;
    const double dens = len.empty() ? 0.0 : static_cast<double>(counts[b]) / (len.size() * width);
    t.rows.push_back({lo, lo + width, counts[b], dens,
                      has_rayleigh ? an::nearest_eaves_pdf(cfg.lambda, mid) : kNaN,
                      has_disk ? 2.0 * mid / (cfg.r * cfg.r) : kNaN});
  }
  json summary = {{"samples", len.size()}, {"mean", len.empty() ? 0.0 : stats::mean(len)}};
  if (has_rayleigh && !len.empty()) {
    summary["rayleigh_mean"] = an::rayleigh_edge_mean(cfg.lambda);
    summary["ks_rayleigh"] =
        stats::ks_distance(len, [&](double x) { return an::rayleigh_cdf(cfg.lambda, x); });
    // Share of lengths beyond the reference 90% quantile, minus 0.1.
    const double x90 = std::sqrt(-std::log(0.1) / (std::numbers::pi * cfg.lambda));
    const auto beyond = std::count_if(len.begin(), len.end(), [&](double l) { return l > x90; });
    summary["tail_excess"] = static_cast<double>(beyond) / len.size() - 0.1;
  }
  if (has_disk && !len.empty()) {
    summary["ks_disk"] = stats::ks_distance(len, [&](double x) { return an::disk_edge_cdf(cfg.r, x); });
  }
  t.summary = summary;
  return {emit(cfg, t), kOk, {}};
}

CommandResult cmd_regimes(const ExperimentConfig& cfg) {
  const an::RegimeDescriptors reg(cfg.lambda);
  const auto rs = cfg.grid.empty() ? log_grid(0.05, 10.0, 40) : cfg.grid;
  Table t;
  t.columns = {"r", "mean_out", "piecewise_bound", "poisson_mean", "geometric_mean", "power_limited"};
  for (const double r : rs) {
    t.rows.push_back({r, an::mean_out_degree({cfg.lambda, r}), reg.piecewise_bound(r),
                      std::numbers::pi * r * r, 1.0 / cfg.lambda,
                      static_cast<std::int64_t>(reg.power_limited(r))});
  }
  t.summary = {{"lambda", cfg.lambda},
               {"r_T", reg.r_transition()},
               {"slope", reg.slope()},
               {"eps", cfg.eps},
               {"r_eps", reg.r_eps(cfg.eps)}};
  return {emit(cfg, t), kOk, {}};
}

Table threshold_table(const ThresholdEstimate& est) {
  Table t;
  t.columns = {"size", "value", "ci_lo", "ci_hi", "runs", "censored_low", "censored_high"};
  for (const auto& w : est.per_window) {
    t.rows.push_back({w.size, w.value, w.ci_lo, w.ci_hi, static_cast<std::int64_t>(w.runs),
                      static_cast<std::int64_t>(w.censored_low),
                      static_cast<std::int64_t>(w.censored_high)});
  }
  t.summary = json::parse(threshold_to_json(est));
  t.summary.erase("method");
  return t;
}

std::string emit_threshold(const ExperimentConfig& cfg, const ThresholdEstimate& est) {
  if (cfg.format == "csv") return emit(cfg, threshold_table(est));
  return emit_json(cfg, json::parse(threshold_to_json(est)));
}

CommandResult cmd_lattice(const ExperimentConfig& cfg, unsigned workers) {
  const auto placement = lattice::parse_placement(cfg.placement);
  const auto rule = lattice::parse_rule(cfg.rule);
  const auto ball = lattice::parse_ball(cfg.ball);
  if (cfg.estimate) {
    lattice::PcSearch s;
    s.placement = placement;
    s.rule = rule;
    s.ball = ball;
    if (!cfg.ladder.empty()) {
      s.ladder.clear();
      for (const double n : cfg.ladder) s.ladder.push_back(static_cast<int>(n));
    }
    s.runs = cfg.runs;
    s.master_seed = cfg.seed;
    s.workers = workers;
    return {emit_threshold(cfg, lattice::estimate_pc(s)), kOk, {}};
  }
  detail::require(!cfg.p.empty(), "lattice needs --p (one or more values) or --estimate");
  const int n = cfg.n > 0 ? cfg.n : 128;
  Table t;
  t.columns = {"p", "n", "crossing_fraction", "ci_lo", "ci_hi"};
  for (const double p : cfg.p) {
    const auto c = lattice::crossing_probability(n, p, placement, rule, ball, cfg.runs, cfg.seed, workers);
    t.rows.push_back({c.p, static_cast<std::int64_t>(c.n), c.fraction, c.ci_lo, c.ci_hi});
  }
  return {emit(cfg, t), kOk, {}};
}

CommandResult cmd_percolate(const ExperimentConfig& cfg, unsigned workers) {
  PercRunParams p;
  p.lambda = cfg.lambda;
  p.r = cfg.r;
  p.side = cfg.side;
  p.runs = cfg.runs;
  p.shell_width = cfg.shell;
  p.master_seed = cfg.seed;
  p.workers = workers;
  const auto th = estimate_theta(p);
  if (cfg.format == "csv") {
    Table t;
    t.columns = {"theta_hat", "ci_lo", "ci_hi", "runs", "successes", "shell_width"};
    t.rows.push_back({th.theta, th.ci_lo, th.ci_hi, static_cast<std::int64_t>(th.runs),
                      static_cast<std::int64_t>(th.successes), th.shell_width});
    return {emit(cfg, t), kOk, {}};
  }
  const json body = {
      {"theta_hat", th.theta},
      {"ci", {th.ci_lo, th.ci_hi}},
      {"runs", th.runs},
      {"successes", th.successes},
      {"criterion",
       {{"type", "out-component of the node nearest the center reaches the boundary shell"},
        {"shell_width", th.shell_width},
        {"empty_runs", th.empty_runs}}},
  };
  return {emit_json(cfg, body), kOk, {}};
}

SearchConfig search_config(const ExperimentConfig& cfg, unsigned workers) {
  SearchConfig s;
  if (!cfg.ladder.empty()) s.ladder = cfg.ladder;
  s.runs = cfg.runs;
  s.master_seed = cfg.seed;
  s.workers = workers;
  return s;
}

CommandResult cmd_threshold(const ExperimentConfig& cfg, unsigned workers) {
  const auto s = search_config(cfg, workers);
  try {
    ThresholdEstimate est;
    if (cfg.direction == "lambda_c") est = estimate_lambda_c(cfg.r, s);
    else if (cfg.direction == "r_c") est = estimate_r_c(cfg.lambda, s);
    else if (cfg.direction == "lambda_inf") est = estimate_lambda_inf(s);
    else throw ParameterError("unknown direction '" + cfg.direction + "' (lambda_c|r_c|lambda_inf)");
    return {emit_threshold(cfg, est), kOk, {}};
  } catch (const BracketError& e) {
    return {emit_json(cfg, {{"error", e.what()}}), kPartial, e.what()};
  }
}

CommandResult cmd_sweep(const ExperimentConfig& cfg, unsigned workers) {
  const auto result = sweep(parse_sweep_direction(cfg.direction), cfg.grid, search_config(cfg, workers));
  Table t;
  t.columns = {"x", "estimate", "ci_lo", "ci_hi", "approx", "residual"};
  json errors = json::array();
  for (const auto& r : result.rows) {
    t.rows.push_back({r.x, r.estimate, r.ci_lo, r.ci_hi, r.approx, r.residual});
    if (!r.error.empty()) errors.push_back({{"x", r.x}, {"error", r.error}});
  }
  if (!errors.empty()) t.summary = {{"errors", errors}};
  const bool failed = result.has_failures();
  return {emit(cfg, t), failed ? kPartial : kOk, failed ? errors.dump() : std::string{}};
}

CommandResult cmd_graph(const ExperimentConfig& cfg) {
  const SeedSpec seed{cfg.seed, 0};
  const Window w = Window::plain(cfg.side);
  auto goods = sample_ppp(1.0, w, seed, Stream::goods);
  auto eaves = sample_ppp(cfg.lambda, w, seed, Stream::eaves);
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "# " << header_json(cfg) << '\n';
    write_points_csv(os, goods);
    return {os.str(), kOk, {}};
  }
  const auto g = build_directed(std::move(goods), std::move(eaves), cfg.r);
  json doc = header(cfg);
  doc.update(json::parse(graph_to_json(g)));
  return {doc.dump() + "\n", kOk, {}};
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

CommandResult cmd_analytic(const ExperimentConfig& cfg) {
  if (cfg.batch.empty()) {
    Table t;
    t.columns = {"quantity", "value"};
    t.rows.push_back({cfg.quantity, analytic_value(cfg.quantity, cfg)});
    return {emit(cfg, t), kOk, {}};
  }

  std::ifstream in(cfg.batch);
  if (!in) throw ParameterError("cannot read batch file " + cfg.batch);
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("batch file is empty");
  const auto columns = split_csv_line(line);
  std::ostringstream os;
  os << "# " << header_json(cfg) << '\n' << line << ',' << cfg.quantity << '\n';
  const std::map<std::string, std::function<void(ExperimentConfig&, double)>> setters = {
      {"lambda", [](ExperimentConfig& c, double v) { c.lambda = v; }},
      {"r", [](ExperimentConfig& c, double v) { c.r = v; }},
      {"n", [](ExperimentConfig& c, double v) { c.n = static_cast<int>(v); }},
      {"eps", [](ExperimentConfig& c, double v) { c.eps = v; }},
      {"x", [](ExperimentConfig& c, double v) { c.x = v; }},
      {"power", [](ExperimentConfig& c, double v) { c.power = v; }},
      {"theta", [](ExperimentConfig& c, double v) { c.theta = v; }},
      {"noise", [](ExperimentConfig& c, double v) { c.noise = v; }},
      {"alpha", [](ExperimentConfig& c, double v) { c.alpha = v; }},
  };
  int failures = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    ExperimentConfig row = cfg;
    std::string value;
    try {
      for (std::size_t i = 0; i < columns.size() && i < cells.size(); ++i) {
        if (const auto it = setters.find(columns[i]); it != setters.end())
          it->second(row, parse_real(cells[i]));
      }
      value = format_real(analytic_value(cfg.quantity, row));
    } catch (const std::invalid_argument&) {
      value = "nan";
      ++failures;
    }
    os << line << ',' << value << '\n';
  }
  return {os.str(), failures ? kPartial : kOk,
          failures ? std::to_string(failures) + " batch rows failed" : std::string{}};
}

using Quantity = std::function<double(const ExperimentConfig&)>;

const std::map<std::string, Quantity>& quantity_table() {
  static const std::map<std::string, Quantity> table = {
      {"out_isolation", [](const auto& c) { return an::out_isolation({c.lambda, c.r}); }},
      {"basic_isolation", [](const auto& c) { return an::basic_isolation(c.lambda); }},
      {"out_pmf", [](const auto& c) { return an::out_degree_pmf({c.lambda, c.r}, c.n); }},
      {"upper_gamma", [](const auto& c) { return an::regularized_upper_gamma_int(c.n, c.x); }},
      {"mean_out", [](const auto& c) { return an::mean_out_degree({c.lambda, c.r}); }},
      {"mean_basic", [](const auto& c) { return an::mean_basic_degree({c.lambda, c.r}); }},
      {"mean_enhanced", [](const auto& c) { return an::mean_enhanced_degree({c.lambda, c.r}); }},
      {"eta", [](const auto& c) { return an::secrecy_ratios({c.lambda, c.r}).eta; }},
      {"eta_prime", [](const auto& c) { return an::secrecy_ratios({c.lambda, c.r}).eta_prime; }},
      {"ratio_floor", [](const auto&) { return an::basic_to_enhanced_floor(); }},
      {"cdf_lower", [](const auto& c) { return an::basic_cdf_bounds(c.lambda, c.n).lower; }},
      {"cdf_upper", [](const auto& c) { return an::basic_cdf_bounds(c.lambda, c.n).upper; }},
      {"mean_basic_lower", [](const auto& c) { return an::basic_cdf_bounds(c.lambda, 0).mean_lower; }},
      {"mean_basic_upper", [](const auto& c) { return an::basic_cdf_bounds(c.lambda, 0).mean_upper; }},
      {"r_T", [](const auto& c) { return an::RegimeDescriptors(c.lambda).r_transition(); }},
      {"slope", [](const auto& c) { return an::RegimeDescriptors(c.lambda).slope(); }},
      {"piecewise_bound",
       [](const auto& c) { return an::RegimeDescriptors(c.lambda).piecewise_bound(c.r); }},
      {"r_eps", [](const auto& c) { return an::RegimeDescriptors(c.lambda).r_eps(c.eps); }},
      {"lambda_c_approx", [](const auto& c) { return an::lambda_c_approx(c.r); }},
      {"r_c_approx", [](const auto& c) { return an::r_c_approx(c.lambda); }},
      {"r_c_lower_bound", [](const auto& c) { return an::r_c_linear_lower_bound(c.lambda); }},
      {"critical_p_isol", [](const auto& c) { return an::critical_graph_approx(c.lambda).p_isol; }},
      {"critical_mean_lower",
       [](const auto& c) { return an::critical_graph_approx(c.lambda).mean_deg_lower; }},
      {"range", [](const auto& c) { return an::range_from_power(c.power, c.theta, c.noise, c.alpha); }},
      {"nearest_pdf", [](const auto& c) { return an::nearest_eaves_pdf(c.lambda, c.x); }},
      {"rayleigh_mean", [](const auto& c) { return an::rayleigh_edge_mean(c.lambda); }},
      {"c", [](const auto&) { return an::constants::c; }},
      {"bound_a", [](const auto&) { return an::constants::bound_a; }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& analytic_quantities() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : quantity_table()) v.push_back(k);
    return v;
  }();
  return names;
}

double analytic_value(const std::string& quantity, const ExperimentConfig& cfg) {
  const auto& table = quantity_table();
  const auto it = table.find(quantity);
  if (it == table.end()) throw ParameterError("unknown quantity '" + quantity + "'");
  return it->second(cfg);
}

CommandResult run_command(const ExperimentConfig& cfg, unsigned workers) {
  detail::require(cfg.format == "csv" || cfg.format == "json", "format must be csv or json");
  const auto& c = cfg.command;
  if (c == "analytic") return cmd_analytic(cfg);
  if (c == "degrees") return cmd_degrees(cfg, workers);
  if (c == "isolation") return cmd_isolation(cfg, workers);
  if (c == "ratios") return cmd_ratios(cfg);
  if (c == "edges") return cmd_edges(cfg, workers);
  if (c == "regimes") return cmd_regimes(cfg);
  if (c == "lattice") return cmd_lattice(cfg, workers);
  if (c == "percolate") return cmd_percolate(cfg, workers);
  if (c == "threshold") return cmd_threshold(cfg, workers);
  if (c == "sweep") return cmd_sweep(cfg, workers);
  if (c == "graph") return cmd_graph(cfg);
  throw ParameterError("unknown command '" + c + "'");
}

}  // namespace secgraph::cli
