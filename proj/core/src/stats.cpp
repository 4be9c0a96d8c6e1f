#include "secgraph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "secgraph/error.hpp"
#include "secgraph/rng.hpp"

namespace secgraph::stats {

Interval wilson_interval(std::uint64_t k, std::uint64_t n, double z) {
  detail::require(n > 0, "wilson interval needs n > 0");
  detail::require(k <= n, "successes exceed trials");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  // The bounds are exactly 0 and 1 at the extremes; rounding would miss that.
  return {k == 0 ? 0.0 : std::max(0.0, center - half), k == n ? 1.0 : std::min(1.0, center + half)};
}

double mean(std::span<const double> v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (const double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double standard_error(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  return stddev(v) / std::sqrt(static_cast<double>(v.size()));
}

double quantile(std::vector<double> v, double q) {
  detail::require(!v.empty(), "quantile of an empty sample");
  detail::require(q >= 0.0 && q <= 1.0, "quantile level must lie in [0, 1]");
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  const double frac = pos - static_cast<double>(i);
  if (i + 1 >= v.size()) return v.back();
  return v[i] + frac * (v[i + 1] - v[i]);
}

double median(std::vector<double> v) { return quantile(std::move(v), 0.5); }

Interval bootstrap_median_ci(std::span<const double> v, std::uint64_t seed, int resamples,
                             double level) {
  detail::require(!v.empty(), "bootstrap of an empty sample");
  auto eng = make_engine({seed, 0}, Stream::bootstrap);
  std::vector<double> meds;
  meds.reserve(static_cast<std::size_t>(resamples));
  std::vector<double> buf(v.size());
  for (int b = 0; b < resamples; ++b) {
    for (auto& x : buf) x = v[static_cast<std::size_t>(uniform01(eng) * static_cast<double>(v.size()))];
    meds.push_back(median(buf));
  }
  const double tail = (1.0 - level) / 2.0;
  return {quantile(meds, tail), quantile(meds, 1.0 - tail)};
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  detail::require(!sample.empty(), "KS distance of an empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  const std::size_t n = std::max(p.size(), q.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    sum += std::abs(a - b);
  }
  return 0.5 * sum;
}

std::vector<double> average_pmfs(const std::vector<std::vector<double>>& pmfs) {
  std::vector<double> out;
  if (pmfs.empty()) return out;
  for (const auto& p : pmfs) {
    if (p.size() > out.size()) out.resize(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += p[i];
  }
  for (auto& v : out) v /= static_cast<double>(pmfs.size());
  return out;
}

}  // namespace secgraph::stats
