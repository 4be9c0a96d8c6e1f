#include "app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "secgraph/error.hpp"
#include "secgraph/parallel.hpp"
#include "secgraph/serialize.hpp"

namespace secgraph::cli {

namespace {

struct Options {
  ExperimentConfig cfg;
  std::string r_text = "1";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  unsigned workers = default_workers();
  std::string replay_path;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Master seed (default: $SECGRAPH_SEED, else 1)");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", o.cfg.out, "Write output to this file instead of stdout");
  sub->add_option("--runs-parallel", o.workers, "Worker threads (default: available cores)")
      ->check(CLI::PositiveNumber);
}

void add_model(CLI::App* sub, Options& o, bool with_side = true) {
  sub->add_option("--lambda", o.cfg.lambda, "Eavesdropper intensity")->capture_default_str();
  sub->add_option("--r", o.r_text, "Transmission range, or inf")->capture_default_str();
  if (with_side) sub->add_option("--L", o.cfg.side, "Window side")->capture_default_str();
}

void add_runs(CLI::App* sub, Options& o) {
  sub->add_option("--runs", o.cfg.runs, "Independent Monte Carlo runs")->capture_default_str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SECGRAPH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParameterError(std::string("SECGRAPH_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

int write_result(const CommandResult& res, const ExperimentConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  if (cfg.out.empty()) {
    out << res.output;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "secgraph: cannot write " << cfg.out << '\n';
      return kUsage;
    }
    f << res.output;
  }
  if (!res.diagnostics.empty()) err << "secgraph: " << res.diagnostics << '\n';
  return res.exit_code;
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secrecy graph simulation and analytics"};
  app.require_subcommand(1);
  Options o;
  auto& c = o.cfg;

  auto* analytic = app.add_subcommand("analytic", "Evaluate a closed-form quantity");
  analytic->add_option("quantity", c.quantity, "Quantity name")
      ->required()
      ->check(CLI::IsMember(analytic_quantities()));
  add_model(analytic, o, false);
  analytic->add_option("--n", c.n, "Degree / order argument");
  analytic->add_option("--eps", c.eps, "Tolerance for r_eps");
  analytic->add_option("--x", c.x, "Point argument (upper_gamma: a, nearest_pdf: x)");
  analytic->add_option("--power", c.power, "Transmit power P");
  analytic->add_option("--theta", c.theta, "SNR threshold");
  analytic->add_option("--noise", c.noise, "Noise power W");
  analytic->add_option("--alpha", c.alpha, "Path-loss exponent");
  analytic->add_option("--batch", c.batch, "CSV with parameter columns; appends the quantity")
      ->check(CLI::ExistingFile);
  add_common(analytic, o);

  auto* degrees = app.add_subcommand("degrees", "Empirical and analytic degree distributions");
  add_model(degrees, o);
  add_runs(degrees, o);
  degrees->add_option("--n-max", c.n_max, "Rows at least up to this degree")->capture_default_str();
  add_common(degrees, o);

  auto* isolation = app.add_subcommand("isolation", "Isolation probabilities of the four graphs");
  add_model(isolation, o);
  add_runs(isolation, o);
  isolation->add_option("--grid", c.grid, "Lambda values (overrides --lambda)")->delimiter(',');
  add_common(isolation, o);

  auto* ratios = app.add_subcommand("ratios", "Secrecy ratios over a grid of r");
  ratios->add_option("--lambda", c.lambda, "Eavesdropper intensity")->capture_default_str();
  ratios->add_option("--grid", c.grid, "r values")->delimiter(',');
  add_common(ratios, o);

  auto* edges = app.add_subcommand("edges", "Edge-length histogram with reference densities");
  add_model(edges, o);
  add_runs(edges, o);
  edges->add_option("--bins", c.bins, "Histogram bins")->capture_default_str();
  add_common(edges, o);

  auto* regimes = app.add_subcommand("regimes", "Mean out-degree versus r with regime markers");
  regimes->add_option("--lambda", c.lambda, "Eavesdropper intensity")->capture_default_str();
  regimes->add_option("--grid", c.grid, "r values")->delimiter(',');
  regimes->add_option("--eps", c.eps, "Tolerance for r_eps")->capture_default_str();
  add_common(regimes, o);

  auto* lat = app.add_subcommand("lattice", "Lattice crossing probabilities or p_c estimate");
  lat->add_option("--placement", c.placement)->check(CLI::IsMember({"midpoints", "sites"}));
  lat->add_option("--rule", c.rule)->check(CLI::IsMember({"analogy", "geometric"}));
  lat->add_option("--ball", c.ball)->check(CLI::IsMember({"open", "closed"}));
  lat->add_option("--p", c.p, "Occupancy probabilities")->delimiter(',');
  lat->add_option("--n", c.n, "Lattice side in sites (default 128)");
  lat->add_flag("--estimate", c.estimate, "Estimate p_c over the --ladder of sides");
  lat->add_option("--ladder", c.ladder, "Lattice sides for --estimate")->delimiter(',');
  add_runs(lat, o);
  add_common(lat, o);

  auto* perc = app.add_subcommand("percolate", "Estimate theta(lambda, r)");
  add_model(perc, o);
  add_runs(perc, o);
  perc->add_option("--shell", c.shell, "Boundary shell width (default from lambda, r)");
  add_common(perc, o);

  auto* thr = app.add_subcommand("threshold", "Estimate lambda_c(r), r_c(lambda) or lambda_inf");
  thr->add_option("--direction", c.direction)
      ->required()
      ->check(CLI::IsMember({"lambda_c", "r_c", "lambda_inf"}));
  add_model(thr, o, false);
  thr->add_option("--ladder", c.ladder, "Window sides")->delimiter(',');
  add_runs(thr, o);
  add_common(thr, o);

  auto* sw = app.add_subcommand("sweep", "Threshold estimates along a grid");
  sw->add_option("--direction", c.direction)->check(CLI::IsMember({"lambda_c", "r_c"}));
  sw->add_option("--grid", c.grid, "r values (lambda_c) or lambda values (r_c)")->delimiter(',');
  sw->add_option("--ladder", c.ladder, "Window sides")->delimiter(',');
  add_runs(sw, o);
  add_common(sw, o);

  auto* graph = app.add_subcommand("graph", "Dump one sampled graph (json) or its nodes (csv)");
  add_model(graph, o);
  add_common(graph, o);

  auto* replay = app.add_subcommand("replay", "Re-run the config embedded in an earlier output");
  replay->add_option("file", o.replay_path)->required()->check(CLI::ExistingFile);
  replay->add_option("--out", c.out, "Write output to this file instead of stdout");
  replay->add_option("--runs-parallel", o.workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    auto* sub = app.get_subcommands().front();
    if (sub == replay) {
      std::ifstream in(o.replay_path, std::ios::binary);
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string out_path = c.out;
      c = config_from_output(buf.str());
      c.out = out_path;
    } else {
      c.command = sub->get_name();
      c.r = parse_real(o.r_text);
      c.seed = o.seed ? *o.seed : default_seed();
      const bool json_default = c.command == "percolate" || c.command == "threshold" ||
                                c.command == "graph";
      c.format = o.format ? *o.format : (json_default ? "json" : "csv");
    }
    const auto res = run_command(c, o.workers);
    const int code = write_result(res, c, out, err);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "secgraph: " << c.command << " finished in " << format_real(secs, 3) << " s\n";
    return code;
  } catch (const std::invalid_argument& e) {
    err << "secgraph: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "secgraph: " << e.what() << '\n';
    return kPartial;
  }
}

}  // namespace secgraph::cli
