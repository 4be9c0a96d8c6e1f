#include "secgraph/threshold.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "secgraph/error.hpp"
#include "secgraph/stats.hpp"

namespace secgraph {

double ThresholdEstimate::drift() const {
  if (per_window.size() < 2) return 0.0;
  return per_window.back().value - per_window.front().value;
}

WindowEstimate summarize_window(double size, std::span<const double> run_values, double lo,
                                double hi, std::uint64_t seed) {
  detail::require(!run_values.empty(), "threshold window needs at least one run");
  WindowEstimate w;
  w.size = size;
  w.runs = static_cast<int>(run_values.size());
  w.value = stats::median({run_values.begin(), run_values.end()});
  const auto ci = stats::bootstrap_median_ci(run_values, seed);
  w.ci_lo = std::min(ci.lo, w.value);
  w.ci_hi = std::max(ci.hi, w.value);
  for (const double v : run_values) {
    if (v <= lo) ++w.censored_low;
    if (v >= hi) ++w.censored_high;
  }
  return w;
}

void finalize_estimate(ThresholdEstimate& est) {
  detail::require(!est.per_window.empty(), "threshold estimate has no windows");
  const auto& last = est.per_window.back();
  est.value = last.value;
  est.ci_lo = last.ci_lo;
  est.ci_hi = last.ci_hi;
  est.runs_per_window = last.runs;
}

std::size_t last_true(std::size_t count, const std::function<bool(std::size_t)>& pred, int* steps) {
  std::size_t good = 0, bad = count + 1;  // pred(good) holds, pred(bad) fails or is out of range
  int evals = 0;
  while (bad - good > 1) {
    const std::size_t mid = good + (bad - good) / 2;
    ++evals;
    if (pred(mid)) good = mid;
    else bad = mid;
  }
  if (steps) *steps = evals;
  return good;
}

double bisect_increasing(double lo, double hi, double tol, const std::function<bool(double)>& holds,
                         int* steps) {
  detail::require(lo < hi && tol > 0.0, "bisection needs lo < hi and tol > 0");
  int evals = 2;
  if (holds(lo)) {
    if (steps) *steps = 1;
    return lo;
  }
  if (!holds(hi)) {
    if (steps) *steps = evals;
    return hi;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    ++evals;
    if (holds(mid)) hi = mid;
    else lo = mid;
  }
  if (steps) *steps = evals;
  return 0.5 * (lo + hi);
}

std::string threshold_to_json(const ThresholdEstimate& est) {
  using nlohmann::json;
  json windows = json::array();
  for (const auto& w : est.per_window) {
    windows.push_back({{"size", w.size},
                       {"value", w.value},
                       {"ci", {w.ci_lo, w.ci_hi}},
                       {"runs", w.runs},
                       {"censored_low", w.censored_low},
                       {"censored_high", w.censored_high}});
  }
  json doc = {
      {"direction", est.direction},
      {"value", est.value},
      {"ci_lo", est.ci_lo},
      {"ci_hi", est.ci_hi},
      {"fixed_parameter", std::isfinite(est.fixed_parameter) ? json(est.fixed_parameter) : json("inf")},
      {"method",
       {{"scheme", "coupled per-run bisection, median crossing"},
        {"search", {est.search_lo, est.search_hi}},
        {"runs_per_window", est.runs_per_window},
        {"bisection_steps", est.bisection_steps},
        {"windows", windows},
        {"drift", est.drift()}}},
      {"subcritical", est.subcritical},
  };
  if (!est.note.empty()) doc["note"] = est.note;
  return doc.dump(2);
}

}  // namespace secgraph
