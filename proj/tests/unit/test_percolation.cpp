#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "secgraph/analytics.hpp"
#include "secgraph/error.hpp"
#include "secgraph/percolation.hpp"
#include "secgraph/threshold.hpp"

using namespace secgraph;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool graph_percolates(const PercolationSample& s, double lambda_max, double lambda, double r) {
  const auto eaves = thin(s.eaves(), s.marks(), lambda / lambda_max);
  return percolates(build_directed(s.goods(), eaves, r), s.shell_width()).percolates;
}

}  // namespace

TEST(ShellWidth, Defaults) {
  EXPECT_DOUBLE_EQ(default_shell_width(0.0, 1.5), 1.5);
  EXPECT_DOUBLE_EQ(default_shell_width(0.25, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(default_shell_width(0.25, 6.0), 6.0);
  EXPECT_DOUBLE_EQ(default_shell_width(0.25, kInf), 4.0);
}

TEST(Percolates, HandBuiltChain) {
  // Nodes spaced 1 apart from the center to the right edge.
  PointSet goods, eaves;
  goods.window = eaves.window = Window::plain(10.0);
  for (int k = 0; k <= 5; ++k) goods.points.push_back({5.0 + k, 5.0});
  const auto g = build_directed(goods, eaves, 1.0);
  EXPECT_TRUE(percolates(g, 0.5).percolates);
  const auto short_range = build_directed(goods, eaves, 0.9);
  EXPECT_FALSE(percolates(short_range, 0.5).percolates);
  EXPECT_TRUE(percolates(short_range, 5.0).percolates);
}

TEST(Percolates, EmptyAndTorus) {
  PointSet goods, eaves;
  goods.window = eaves.window = Window::plain(10.0);
  const auto out = percolates(build_directed(goods, eaves, 1.0), 1.0);
  EXPECT_TRUE(out.empty);
  EXPECT_FALSE(out.percolates);
  goods.window = eaves.window = Window::torus(10.0);
  goods.points = {{1, 1}};
  EXPECT_THROW(percolates(build_directed(goods, eaves, 1.0), 1.0), ParameterError);
}

TEST(PercolationSample, LazySearchMatchesFullGraph) {
  const double lambda_max = 0.3;
  for (std::uint64_t run = 0; run < 12; ++run) {
    const PercolationSample s(30.0, lambda_max, 5.0, {17, run});
    for (const double lambda : {0.0, 0.05, 0.12, 0.2, 0.3})
      for (const double r : {1.0, 1.5, 2.5, kInf}) {
        if (lambda == 0.0 && std::isinf(r)) continue;
        if (std::isinf(r) && thin(s.eaves(), s.marks(), lambda / lambda_max).empty()) continue;
        EXPECT_EQ(s.percolates(lambda, r), graph_percolates(s, lambda_max, lambda, r))
            << run << ' ' << lambda << ' ' << r;
      }
  }
}

TEST(PercolationSample, MonotoneInLambdaAndR) {
  for (std::uint64_t run = 0; run < 20; ++run) {
    const PercolationSample s(40.0, 0.3, 5.0, {23, run});
    bool prev = true;
    for (double lambda = 0.0; lambda <= 0.3; lambda += 0.02) {
      const bool now = s.percolates(lambda, 3.0);
      EXPECT_LE(now, prev);
      prev = now;
    }
    prev = false;
    for (double r = 0.5; r <= 4.0; r += 0.25) {
      const bool now = s.percolates(0.1, r);
      EXPECT_GE(now, prev);
      prev = now;
    }
  }
}

TEST(PercolationSample, RejectsLambdaAboveSampled) {
  const PercolationSample s(20.0, 0.1, 2.0, {1, 0});
  EXPECT_THROW(s.percolates(0.2, 1.0), ParameterError);
  EXPECT_THROW(s.percolates(0.0, kInf), ParameterError);
}

TEST(EstimateTheta, Limits) {
  PercRunParams p;
  p.lambda = 0.0;
  p.r = 3.0;
  p.side = 30.0;
  p.runs = 30;
  EXPECT_DOUBLE_EQ(estimate_theta(p).theta, 1.0);
  p.r = 0.4;
  EXPECT_DOUBLE_EQ(estimate_theta(p).theta, 0.0);
  p.lambda = 2.0;
  p.r = kInf;
  EXPECT_DOUBLE_EQ(estimate_theta(p).theta, 0.0);
  p.runs = 10;
  EXPECT_THROW(estimate_theta(p), ParameterError);
}

TEST(EstimateTheta, DeterministicAndWorkerInvariant) {
  PercRunParams p;
  p.lambda = 0.05;
  p.r = 2.0;
  p.side = 30.0;
  p.runs = 40;
  const auto a = estimate_theta(p);
  p.workers = 3;
  const auto b = estimate_theta(p);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_DOUBLE_EQ(a.ci_lo, b.ci_lo);
  EXPECT_LE(a.ci_lo, a.theta);
  EXPECT_GE(a.ci_hi, a.theta);
}

TEST(Threshold, LastTrue) {
  for (std::size_t count : {0u, 1u, 7u, 100u})
    for (std::size_t cut = 0; cut <= count; ++cut) {
      int steps = 0;
      EXPECT_EQ(last_true(count, [cut](std::size_t k) { return k <= cut; }, &steps), cut);
      EXPECT_LE(steps, static_cast<int>(std::ceil(std::log2(count + 2.0))) + 1);
    }
}

TEST(Threshold, BisectIncreasing) {
  int steps = 0;
  const double x = bisect_increasing(0.0, 1.0, 1e-6, [](double v) { return v >= 0.3141; }, &steps);
  EXPECT_NEAR(x, 0.3141, 1e-6);
  EXPECT_GT(steps, 10);
  EXPECT_DOUBLE_EQ(bisect_increasing(0.0, 1.0, 1e-6, [](double) { return true; }), 0.0);
  EXPECT_DOUBLE_EQ(bisect_increasing(0.0, 1.0, 1e-6, [](double) { return false; }), 1.0);
}

TEST(Threshold, SummarizeWindow) {
  const std::vector<double> v{0.1, 0.2, 0.3, 0.4, 0.5, 0.0, 1.0};
  const auto w = summarize_window(10.0, v, 0.0, 1.0, 3);
  EXPECT_DOUBLE_EQ(w.value, 0.3);
  EXPECT_EQ(w.runs, 7);
  EXPECT_EQ(w.censored_low, 1);
  EXPECT_EQ(w.censored_high, 1);
  EXPECT_LE(w.ci_lo, w.value);
  EXPECT_GE(w.ci_hi, w.value);
}

TEST(Threshold, FinalizeAndJson) {
  ThresholdEstimate est;
  est.direction = "lambda_inf";
  est.fixed_parameter = kInf;
  est.per_window = {summarize_window(40, std::vector<double>{0.1, 0.12, 0.14}, 0, 1, 1),
                    summarize_window(80, std::vector<double>{0.13, 0.15, 0.17}, 0, 1, 2)};
  finalize_estimate(est);
  EXPECT_DOUBLE_EQ(est.value, 0.15);
  EXPECT_NEAR(est.drift(), 0.03, 1e-12);
  const auto doc = nlohmann::json::parse(threshold_to_json(est));
  EXPECT_EQ(doc["fixed_parameter"], "inf");
  EXPECT_EQ(doc["method"]["windows"].size(), 2u);
  EXPECT_DOUBLE_EQ(doc["value"].get<double>(), 0.15);
}

TEST(Search, LambdaCBelowGilbertIsSubcritical) {
  SearchConfig cfg;
  const auto est = estimate_lambda_c(1.0, cfg);
  EXPECT_TRUE(est.subcritical);
  EXPECT_DOUBLE_EQ(est.value, 0.0);
  EXPECT_FALSE(est.note.empty());
  EXPECT_THROW(estimate_lambda_c(kInf, cfg), ParameterError);
}

TEST(Search, RcAboveAsymptoteRejected) {
  SearchConfig cfg;
  EXPECT_THROW(estimate_r_c(0.2, cfg), ParameterError);
}

TEST(Search, ValidatesConfig) {
  SearchConfig cfg;
  cfg.runs = 5;
  EXPECT_THROW(estimate_lambda_inf(cfg), ParameterError);
  cfg.runs = 30;
  cfg.ladder = {80.0, 40.0};
  EXPECT_THROW(estimate_lambda_inf(cfg), ParameterError);
}

TEST(Search, GilbertRadiusSmallScale) {
  SearchConfig cfg;
  cfg.ladder = {30.0, 40.0};
  cfg.runs = 40;
  const auto est = estimate_r_c(0.0, cfg);
  EXPECT_EQ(est.direction, "gilbert_r");
  ASSERT_EQ(est.per_window.size(), 2u);
  EXPECT_GT(est.value, 1.0);
  EXPECT_LT(est.value, 1.4);
  cfg.workers = 2;
  EXPECT_DOUBLE_EQ(estimate_r_c(0.0, cfg).value, est.value);
}

TEST(Search, LambdaCSmallScale) {
  SearchConfig cfg;
  cfg.ladder = {30.0};
  cfg.runs = 30;
  const auto est = estimate_lambda_c(2.5, cfg);
  EXPECT_GT(est.value, 0.0);
  EXPECT_LT(est.value, 0.3);
  EXPECT_LE(est.ci_lo, est.value);
  EXPECT_GE(est.ci_hi, est.value);
}

TEST(CriticalGraphStats, FieldsPopulated) {
  const auto s = critical_graph_stats(0.05, 1.5, 4, 1, 30.0);
  EXPECT_DOUBLE_EQ(s.approx_p_isol, analytics::critical_graph_approx(0.05).p_isol);
  EXPECT_GT(s.p_isol, 0.0);
  EXPECT_LT(s.p_isol, 0.3);
  EXPECT_GT(s.mean_out, 3.0);
  EXPECT_GT(s.mean_out_se, 0.0);
}

TEST(Sweep, RecordsFailuresPerPoint) {
  SearchConfig cfg;
  cfg.ladder = {30.0};
  cfg.runs = 30;
  const auto res = sweep(SweepDirection::r_c, {0.0, 0.2}, cfg);
  ASSERT_EQ(res.rows.size(), 2u);
  EXPECT_TRUE(res.rows[0].error.empty());
  EXPECT_FALSE(res.rows[1].error.empty());
  EXPECT_TRUE(res.has_failures());
  std::ostringstream os;
  write_sweep_csv(os, res);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "x,estimate,ci_lo,ci_hi,approx,residual");
  EXPECT_EQ(parse_sweep_direction("lambda_c"), SweepDirection::lambda_c);
  EXPECT_THROW(parse_sweep_direction("up"), ParameterError);
}
