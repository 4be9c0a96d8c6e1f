#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace secgraph {

/// Threshold estimate on one window size of a ladder.
struct WindowEstimate {
  double size = 0.0;  ///< L for continuum runs, n for lattices
  double value = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  int runs = 0;
  int censored_low = 0;   ///< runs whose critical value sits at the lower search bound
  int censored_high = 0;  ///< ... at the upper search bound
};

/// A critical-parameter estimate. Each run draws one coupled configuration
/// family and bisects for the parameter value at which its crossing
/// indicator flips; the crossing fraction across runs is 1/2 at the median
/// of those per-run values, so the estimate is that median with a bootstrap
/// interval. The reported value comes from the largest window of the ladder;
/// the other windows are kept to show finite-size drift.
struct ThresholdEstimate {
  double value = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::string direction;  ///< lambda_c_of_r, r_c_of_lambda, lambda_inf, gilbert_r, p_c
  double fixed_parameter = 0.0;
  double search_lo = 0.0;
  double search_hi = 0.0;
  int runs_per_window = 0;
  int bisection_steps = 0;
  std::vector<WindowEstimate> per_window;
  bool subcritical = false;
  std::string note;

  /// Largest-window value minus smallest-window value.
  double drift() const;
};

/// Summarises per-run critical values for one window.
WindowEstimate summarize_window(double size, std::span<const double> run_values, double lo,
                                double hi, std::uint64_t seed);

/// Assembles the ladder into one estimate (value and interval from the last window).
void finalize_estimate(ThresholdEstimate& est);

/// Largest k in [0, count] with pred(k) true, for pred monotone
/// non-increasing in k and pred(0) assumed true. Returns the number of
/// predicate evaluations through steps.
std::size_t last_true(std::size_t count, const std::function<bool(std::size_t)>& pred,
                      int* steps = nullptr);

/// Critical point of a monotone non-decreasing indicator on [lo, hi],
/// located to within tol. Returns lo if it already holds at lo and hi if it
/// never holds.
double bisect_increasing(double lo, double hi, double tol, const std::function<bool(double)>& holds,
                         int* steps = nullptr);

std::string threshold_to_json(const ThresholdEstimate& est);

}  // namespace secgraph
