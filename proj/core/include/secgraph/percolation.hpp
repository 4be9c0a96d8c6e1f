#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "secgraph/point_process.hpp"
#include "secgraph/secrecy_graph.hpp"
#include "secgraph/spatial_grid.hpp"
#include "secgraph/threshold.hpp"

namespace secgraph {

/// Shell width used by the crossing criterion: max(r, 2/sqrt(lambda)) with
/// infinite r dropped, and r alone when lambda == 0.
double default_shell_width(double lambda, double r);

struct PercolationOutcome {
  bool percolates = false;
  bool empty = false;  ///< no good nodes to start from
};

/// True iff the out-component of the good node nearest the window center
/// reaches a node within w of the edge of the good nodes' window.
/// Requires a non-periodic window.
PercolationOutcome percolates(const SecrecyGraph& g, double shell_width);

/// One percolation sample with goods on the plain window [0, L]^2 and
/// eavesdroppers sampled at lambda_max on the window inflated by 2w, each
/// carrying a uniform mark. Evaluating at lambda keeps the eavesdroppers
/// with mark < lambda / lambda_max, so for fixed r the outcome is monotone
/// in lambda, and for fixed lambda it is monotone in r. The out-component
/// is explored lazily from the start node, without building the full graph.
class PercolationSample {
 public:
  PercolationSample(double side, double lambda_max, double shell_width, const SeedSpec& seed);
  PercolationSample(const PercolationSample&) = delete;  // the grid views goods_
  PercolationSample& operator=(const PercolationSample&) = delete;

  bool percolates(double lambda, double r) const;

  const PointSet& goods() const noexcept { return goods_; }
  const PointSet& eaves() const noexcept { return eaves_; }
  const std::vector<double>& marks() const noexcept { return marks_; }
  double shell_width() const noexcept { return shell_; }
  bool empty() const noexcept { return goods_.empty(); }

 private:
  PointSet goods_;
  PointSet eaves_;
  std::vector<double> marks_;
  double lambda_max_;
  double shell_;
  GridIndex goods_grid_;
  std::uint32_t start_ = 0;
};

struct PercRunParams {
  double lambda = 0.0;
  double r = 1.0;  ///< may be +inf
  double side = 60.0;
  int runs = 60;
  double shell_width = std::numeric_limits<double>::quiet_NaN();  ///< NaN: default_shell_width
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
};

struct ThetaEstimate {
  double theta = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  int runs = 0;
  int successes = 0;
  int empty_runs = 0;
  double shell_width = 0.0;
};

/// Fraction of independent samples that percolate, with a Wilson 95% interval.
ThetaEstimate estimate_theta(const PercRunParams& p);

/// Window ladder and Monte Carlo budget shared by the threshold searches.
struct SearchConfig {
  std::vector<double> ladder{40.0, 60.0, 80.0};
  int runs = 60;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
  double lambda_tol = 2e-4;
  double r_tol = 1e-3;
};

/// lambda_c(r). Returns 0 flagged subcritical when r <= r_G.
ThresholdEstimate estimate_lambda_c(double r, const SearchConfig& cfg);
/// r_c(lambda) for 0 <= lambda < lambda_inf; lambda = 0 gives Gilbert's radius.
ThresholdEstimate estimate_r_c(double lambda, const SearchConfig& cfg);
/// Critical intensity of the r = inf graph.
ThresholdEstimate estimate_lambda_inf(const SearchConfig& cfg);

struct CriticalGraphStats {
  double lambda = 0.0;
  double r = 0.0;
  double p_isol = 0.0;
  double p_isol_se = 0.0;
  double mean_out = 0.0;
  double mean_out_se = 0.0;
  double approx_p_isol = 0.0;
  double approx_mean_lower = 0.0;
};

/// Out-isolation and mean out-degree of graphs at (lambda, r_c).
CriticalGraphStats critical_graph_stats(double lambda, double r_c, int runs, std::uint64_t seed,
                                        double side = 60.0, unsigned workers = 1);

enum class SweepDirection { lambda_c, r_c };

struct SweepRow {
  double x = 0.0;
  double estimate = std::numeric_limits<double>::quiet_NaN();
  double ci_lo = std::numeric_limits<double>::quiet_NaN();
  double ci_hi = std::numeric_limits<double>::quiet_NaN();
  double approx = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();
  std::string error;  ///< empty on success
};

struct SweepResult {
  SweepDirection direction = SweepDirection::lambda_c;
  std::vector<SweepRow> rows;

  bool has_failures() const;
};

/// Threshold estimates along a sorted grid of r (lambda_c) or lambda (r_c)
/// values. Failed points keep their row with the error recorded.
SweepResult sweep(SweepDirection direction, const std::vector<double>& grid,
                  const SearchConfig& cfg);

/// Header "x,estimate,ci_lo,ci_hi,approx,residual".
void write_sweep_csv(std::ostream& os, const SweepResult& result);

SweepDirection parse_sweep_direction(const std::string& s);

}  // namespace secgraph
