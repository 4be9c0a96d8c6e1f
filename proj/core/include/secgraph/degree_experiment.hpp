#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secgraph/secrecy_graph.hpp"

namespace secgraph {

struct DegreeExperimentConfig {
  double lambda = 0.2;
  double r = 1.0;  ///< may be +inf
  double side = 100.0;
  int runs = 30;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
  bool with_center = false;     ///< add a node at the window center and record its degrees
  bool collect_lengths = false;
};

/// Degree counts of one node.
struct NodeDegrees {
  std::uint32_t in = 0, out = 0, basic = 0, enhanced = 0;
};

/// Interior-node histograms of one sample. Index = degree, value = count.
struct RunDegrees {
  std::vector<std::uint64_t> in, out, basic, enhanced;
  std::uint64_t interior = 0;
  std::uint64_t nodes = 0;
  /// All-node sums; basic + enhanced == 2 * out must hold exactly.
  std::uint64_t sum_in = 0, sum_out = 0, sum_basic = 0, sum_enhanced = 0;
  bool chain_ok = true;  ///< N <= min(in, out) <= max(in, out) <= N' <= in + out per node
  std::optional<NodeDegrees> origin;

  double mean_out() const;
  double mean_in() const;
  double mean_basic() const;
  double mean_enhanced() const;
  double fraction_at(const std::vector<std::uint64_t>& hist, std::size_t k) const;
};

struct DegreeExperiment {
  DegreeExperimentConfig config;
  std::vector<RunDegrees> runs;
  std::vector<double> lengths;  ///< pooled edge lengths when collect_lengths

  /// Pooled interior pmfs.
  std::vector<double> pmf_in() const;
  std::vector<double> pmf_out() const;
  std::vector<double> pmf_basic() const;
  std::vector<double> pmf_enhanced() const;

  /// Per-run values of a statistic, for run-level standard errors.
  std::vector<double> per_run_mean_out() const;
  std::vector<double> per_run_mean_in() const;
  std::vector<double> per_run_mean_basic() const;
  std::vector<double> per_run_mean_enhanced() const;

  std::uint64_t interior_nodes() const;
  /// basic + enhanced == 2 * out on every run.
  bool identity_holds() const;
  bool chain_holds() const;
};

/// Samples goods and eavesdroppers on the window inflated by degree_margin
/// and counts degrees of interior nodes only.
DegreeExperiment run_degree_experiment(const DegreeExperimentConfig& cfg);

/// Histogram of a degree vector restricted to a mask.
std::vector<std::uint64_t> histogram(const std::vector<std::uint32_t>& values,
                                     const std::vector<bool>& mask);

/// Normalised sum of histograms.
std::vector<double> pooled_pmf(const std::vector<const std::vector<std::uint64_t>*>& hists);

}  // namespace secgraph
