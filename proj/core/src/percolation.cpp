#include "secgraph/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "secgraph/analytics.hpp"
#include "secgraph/degree_experiment.hpp"
#include "secgraph/error.hpp"
#include "secgraph/parallel.hpp"
#include "secgraph/serialize.hpp"
#include "secgraph/stats.hpp"

namespace secgraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Run indices of different ladder windows never collide.
constexpr std::uint64_t kWindowStride = 1'000'003;

std::uint32_t nearest_to(const std::vector<Point>& pts, Point c) {
  std::uint32_t best = 0;
  double best_d = kInf;
  for (std::uint32_t i = 0; i < pts.size(); ++i) {
    const double d = std::hypot(pts[i].x - c.x, pts[i].y - c.y);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

void check_model(double lambda, double r) {
  detail::require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and >= 0");
  detail::require(!std::isnan(r) && r > 0.0, "range r must be > 0");
  detail::require(std::isfinite(r) || lambda > 0.0, "r = inf needs lambda > 0");
}

void check_search(const SearchConfig& cfg) {
  detail::require(!cfg.ladder.empty(), "window ladder is empty");
  detail::require(std::is_sorted(cfg.ladder.begin(), cfg.ladder.end()), "window ladder must be sorted");
  detail::require(cfg.ladder.front() > 0.0, "window sides must be > 0");
  detail::require(cfg.runs >= 30, "threshold search needs at least 30 runs per window");
  detail::require(cfg.lambda_tol > 0.0 && cfg.r_tol > 0.0, "tolerances must be > 0");
}

// Window sides grow with r so that L >= 20 r on every rung.
std::vector<double> scaled_ladder(const std::vector<double>& ladder, double r) {
  const double r_fin = std::isfinite(r) ? r : 0.0;
  const double scale = std::max(1.0, 20.0 * r_fin / ladder.front());
  std::vector<double> out;
  for (const double L : ladder) out.push_back(L * scale);
  return out;
}

using RunFn = std::function<double(double side, const SeedSpec& seed, int* steps)>;

ThresholdEstimate run_ladder(ThresholdEstimate est, const std::vector<double>& sides,
                             const SearchConfig& cfg, const RunFn& fn) {
  for (std::size_t k = 0; k < sides.size(); ++k) {
    const double side = sides[k];
    std::vector<double> values(static_cast<std::size_t>(cfg.runs));
    std::vector<int> steps(values.size(), 0);
    parallel_for(values.size(), cfg.workers, [&](std::size_t run) {
      const SeedSpec seed{cfg.master_seed, k * kWindowStride + run};
      values[run] = fn(side, seed, &steps[run]);
    });
    est.bisection_steps = std::max(est.bisection_steps, *std::max_element(steps.begin(), steps.end()));
    auto w = summarize_window(side, values, est.search_lo, est.search_hi, cfg.master_seed + k);
    if (2 * w.censored_low > w.runs || 2 * w.censored_high > w.runs) {
      std::ostringstream msg;
      msg << est.direction << ": crossing not bracketed by [" << est.search_lo << ", "
          << est.search_hi << "] at L=" << side << "; " << w.censored_low << " of " << w.runs
          << " runs at the lower bound, " << w.censored_high << " at the upper bound";
      for (const auto& prev : est.per_window)
        msg << "; L=" << prev.size << " gave " << prev.value;
      throw BracketError(msg.str());
    }
    est.per_window.push_back(w);
  }
  finalize_estimate(est);
  return est;
}

}  // namespace

double default_shell_width(double lambda, double r) {
  const double r_fin = std::isfinite(r) ? r : 0.0;
  if (lambda <= 0.0) return r_fin;
  return std::max(r_fin, 2.0 / std::sqrt(lambda));
}

PercolationOutcome percolates(const SecrecyGraph& g, double shell_width) {
  detail::require(!g.window().is_torus(), "the crossing criterion needs a non-periodic window");
  detail::require(shell_width >= 0.0, "shell width must be >= 0");
  if (g.size() == 0) return {false, true};
  const Window& w = g.window();
  const auto start = nearest_to(g.goods().points, w.center());
  for (const NodeId x : out_component(g, start)) {
    if (w.distance_to_edge(g.goods()[x]) <= shell_width) return {true, false};
  }
  return {false, false};
}

PercolationSample::PercolationSample(double side, double lambda_max, double shell_width,
                                     const SeedSpec& seed)
    : goods_(sample_ppp(1.0, Window::plain(side), seed, Stream::goods)),
      eaves_(sample_ppp(lambda_max, Window::inflated(side, 2.0 * shell_width), seed, Stream::eaves)),
      marks_(draw_marks(eaves_)),
      lambda_max_(lambda_max),
      shell_(shell_width),
      goods_grid_(goods_.points, goods_.window, default_cell_size(lambda_max, 1.0, side)) {
  detail::require(shell_width >= 0.0, "shell width must be >= 0");
  if (!goods_.empty()) start_ = nearest_to(goods_.points, goods_.window.center());
}

bool PercolationSample::percolates(double lambda, double r) const {
  check_model(lambda, r);
  detail::require(lambda <= lambda_max_, "lambda exceeds the sampled intensity");
  if (goods_.empty()) return false;

  const double keep = lambda_max_ > 0.0 ? lambda / lambda_max_ : 0.0;
  std::vector<Point> kept;
  for (std::size_t i = 0; i < eaves_.size(); ++i)
    if (marks_[i] < keep) kept.push_back(eaves_[i]);
  const Window& ew = eaves_.window;
  const GridIndex eaves_grid(kept, ew, default_cell_size(lambda, kInf, ew.extent()));

  const Window& w = goods_.window;
  std::vector<std::uint8_t> seen(goods_.size(), 0);
  std::vector<std::uint32_t> stack{start_};
  seen[start_] = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    const Point p = goods_[x];
    if (w.distance_to_edge(p) <= shell_) return true;
    const double guard = eaves_grid.nearest_distance(p);
    goods_grid_.for_each_within(p, std::min(r, guard), [&](std::uint32_t j, double d) {
      if (!seen[j] && d <= r && d < guard) {
        seen[j] = 1;
        stack.push_back(j);
      }
    });
  }
  return false;
}

ThetaEstimate estimate_theta(const PercRunParams& p) {
  check_model(p.lambda, p.r);
  detail::require(p.side > 0.0, "window side must be > 0");
  detail::require(p.runs >= 30, "theta estimation needs at least 30 runs");
  const double w = std::isnan(p.shell_width) ? default_shell_width(p.lambda, p.r) : p.shell_width;

  std::vector<std::uint8_t> hit(static_cast<std::size_t>(p.runs), 0), empty(hit.size(), 0);
  parallel_for(hit.size(), p.workers, [&](std::size_t run) {
    const PercolationSample s(p.side, p.lambda, w, {p.master_seed, run});
    empty[run] = s.empty() ? 1 : 0;
    hit[run] = s.percolates(p.lambda, p.r) ? 1 : 0;
  });
  ThetaEstimate t;
  t.runs = p.runs;
  t.shell_width = w;
  t.successes = static_cast<int>(std::count(hit.begin(), hit.end(), std::uint8_t{1}));
  t.empty_runs = static_cast<int>(std::count(empty.begin(), empty.end(), std::uint8_t{1}));
  t.theta = static_cast<double>(t.successes) / p.runs;
  const auto ci = stats::wilson_interval(static_cast<std::uint64_t>(t.successes),
                                         static_cast<std::uint64_t>(p.runs));
  t.ci_lo = ci.lo;
  t.ci_hi = ci.hi;
  return t;
}

ThresholdEstimate estimate_lambda_c(double r, const SearchConfig& cfg) {
  check_search(cfg);
  detail::require(std::isfinite(r) && r > 0.0,
                  "lambda_c needs a finite r > 0 (use the lambda_inf search for r = inf)");
  ThresholdEstimate est;
  est.direction = "lambda_c_of_r";
  est.fixed_parameter = r;
  if (r <= analytics::constants::r_gilbert_ref) {
    est.subcritical = true;
    est.note = "r <= r_G: the disk graph itself does not percolate, lambda_c = 0";
    return est;
  }
  est.search_lo = 0.0;
  est.search_hi = 2.0 * analytics::constants::lambda_inf_ref;
  const double lambda_max = est.search_hi;
  const double shell = std::max(r, 2.0 / std::sqrt(analytics::constants::lambda_inf_ref));
  return run_ladder(est, scaled_ladder(cfg.ladder, r), cfg,
                    [&](double side, const SeedSpec& seed, int* steps) {
                      const PercolationSample s(side, lambda_max, std::min(shell, side / 4.0), seed);
                      return bisect_increasing(
                          0.0, lambda_max, cfg.lambda_tol,
                          [&](double lambda) { return !s.percolates(lambda, r); }, steps);
                    });
}

ThresholdEstimate estimate_r_c(double lambda, const SearchConfig& cfg) {
  check_search(cfg);
  detail::require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and >= 0");
  if (lambda >= analytics::constants::lambda_inf_ref) {
    std::ostringstream msg;
    msg << "lambda = " << lambda << " is at or beyond lambda_inf = "
        << analytics::constants::lambda_inf_ref << ", where r_c has its vertical asymptote";
    throw ParameterError(msg.str());
  }
  const double r_ref =
      lambda > 0.0 ? analytics::r_c_approx(lambda) : analytics::constants::r_gilbert_ref;
  ThresholdEstimate est;
  est.direction = lambda > 0.0 ? "r_c_of_lambda" : "gilbert_r";
  est.fixed_parameter = lambda;
  est.search_lo = 0.3;
  est.search_hi = std::max(4.0, 3.0 * r_ref);
  const double shell = lambda > 0.0 ? default_shell_width(lambda, r_ref) : r_ref;
  return run_ladder(est, scaled_ladder(cfg.ladder, r_ref), cfg,
                    [&](double side, const SeedSpec& seed, int* steps) {
                      const PercolationSample s(side, lambda, std::min(shell, side / 4.0), seed);
                      return bisect_increasing(
                          est.search_lo, est.search_hi, cfg.r_tol,
                          [&](double r) { return s.percolates(lambda, r); }, steps);
                    });
}

ThresholdEstimate estimate_lambda_inf(const SearchConfig& cfg) {
  check_search(cfg);
  ThresholdEstimate est;
  est.direction = "lambda_inf";
  est.fixed_parameter = kInf;
  est.search_lo = 0.02;
  est.search_hi = 0.4;
  const double shell = 2.0 / std::sqrt(analytics::constants::lambda_inf_ref);
  return run_ladder(est, cfg.ladder, cfg, [&](double side, const SeedSpec& seed, int* steps) {
    const PercolationSample s(side, est.search_hi, std::min(shell, side / 4.0), seed);
    return bisect_increasing(
        est.search_lo, est.search_hi, cfg.lambda_tol,
        [&](double lambda) { return !s.percolates(lambda, kInf); }, steps);
  });
}

CriticalGraphStats critical_graph_stats(double lambda, double r_c, int runs, std::uint64_t seed,
                                        double side, unsigned workers) {
  detail::require(lambda >= 0.0 && lambda < analytics::constants::lambda_inf_ref,
                  "critical graph needs 0 <= lambda < lambda_inf");
  detail::require(std::isfinite(r_c) && r_c > 0.0, "r_c must be finite and > 0");
  detail::require(runs >= 2, "critical graph statistics need at least 2 runs");
  DegreeExperimentConfig dc;
  dc.lambda = lambda;
  dc.r = r_c;
  dc.side = side;
  dc.runs = runs;
  dc.master_seed = seed;
  dc.workers = workers;
  const auto ex = run_degree_experiment(dc);

  std::vector<double> isol;
  for (const auto& r : ex.runs) isol.push_back(r.fraction_at(r.out, 0));
  const auto means = ex.per_run_mean_out();
  const auto approx = analytics::critical_graph_approx(lambda);

  CriticalGraphStats s;
  s.lambda = lambda;
  s.r = r_c;
  s.p_isol = ex.pmf_out().empty() ? 0.0 : ex.pmf_out()[0];
  s.p_isol_se = stats::standard_error(isol);
  s.mean_out = stats::mean(means);
  s.mean_out_se = stats::standard_error(means);
  s.approx_p_isol = approx.p_isol;
  s.approx_mean_lower = approx.mean_deg_lower;
  return s;
}

bool SweepResult::has_failures() const {
  return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.error.empty(); });
}

SweepResult sweep(SweepDirection direction, const std::vector<double>& grid,
                  const SearchConfig& cfg) {
  detail::require(std::is_sorted(grid.begin(), grid.end()), "sweep grid must be sorted");
  SweepResult result;
  result.direction = direction;
  for (const double x : grid) {
    SweepRow row;
    row.x = x;
    try {
      if (direction == SweepDirection::lambda_c) {
        row.approx = x > analytics::constants::r_gilbert_ref ? analytics::lambda_c_approx(x) : 0.0;
        const auto est = estimate_lambda_c(x, cfg);
        row.estimate = est.value;
        row.ci_lo = est.ci_lo;
        row.ci_hi = est.ci_hi;
      } else {
        if (x >= 0.0 && x < analytics::constants::lambda_inf_ref) row.approx = analytics::r_c_approx(x);
        const auto est = estimate_r_c(x, cfg);
        row.estimate = est.value;
        row.ci_lo = est.ci_lo;
        row.ci_hi = est.ci_hi;
      }
      row.residual = row.estimate - row.approx;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    result.rows.push_back(row);
  }
  return result;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "x,estimate,ci_lo,ci_hi,approx,residual\n";
  for (const auto& r : result.rows) {
    os << format_real(r.x) << ',' << format_real(r.estimate) << ',' << format_real(r.ci_lo) << ','
       << format_real(r.ci_hi) << ',' << format_real(r.approx) << ',' << format_real(r.residual)
       << '\n';
  }
}

SweepDirection parse_sweep_direction(const std::string& s) {
  if (s == "lambda_c") return SweepDirection::lambda_c;
  if (s == "r_c") return SweepDirection::r_c;
  throw ParameterError("unknown sweep direction '" + s + "' (lambda_c|r_c)");
}

}  // namespace secgraph
