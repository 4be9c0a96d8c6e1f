#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace secgraph::stats {

struct Interval {
  double lo;
  double hi;

  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
};

/// Wilson score interval for k successes out of n trials (z = 1.96 gives 95%).
Interval wilson_interval(std::uint64_t k, std::uint64_t n, double z = 1.959963984540054);

double mean(std::span<const double> v);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double stddev(std::span<const double> v);
double standard_error(std::span<const double> v);

/// Linear-interpolated quantile of an unsorted sample, q in [0, 1].
double quantile(std::vector<double> v, double q);
double median(std::vector<double> v);

/// Percentile bootstrap interval for the median.
Interval bootstrap_median_ci(std::span<const double> v, std::uint64_t seed, int resamples = 2000,
                             double level = 0.95);

/// sup_x |F_n(x) - F(x)| for the empirical CDF of the sample.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Half the L1 distance between two pmfs; the shorter one is zero-padded.
double total_variation(std::span<const double> p, std::span<const double> q);

/// Component-wise mean of several pmfs of possibly different lengths.
std::vector<double> average_pmfs(const std::vector<std::vector<double>>& pmfs);

}  // namespace secgraph::stats
