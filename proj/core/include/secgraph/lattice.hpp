#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "secgraph/rng.hpp"
#include "secgraph/threshold.hpp"

namespace secgraph::lattice {

/// Where eavesdroppers may sit: the midpoint of every lattice edge, or the sites.
enum class Placement { edge_midpoints, sites };

/// analogy: bond percolation for midpoints, site percolation for sites.
/// geometric_strict: the secrecy-graph rule applied to lattice geometry.
enum class Rule { analogy, geometric_strict };

/// Ball used by geometric_strict: open (distance < 1) or closed (<= 1).
enum class Ball { open, closed };

enum class Direction { horizontal, vertical };

/// n x n sites. Horizontal edges (i,j)-(i+1,j) come first, indexed
/// j*(n-1)+i; vertical edges (i,j)-(i,j+1) follow, indexed n(n-1)+j*n+i.
/// Sites are indexed j*n+i.
struct Geometry {
  int n;

  std::size_t site_count() const noexcept { return static_cast<std::size_t>(n) * n; }
  std::size_t edge_count() const noexcept { return 2 * static_cast<std::size_t>(n) * (n - 1); }
  std::uint32_t site(int i, int j) const noexcept { return static_cast<std::uint32_t>(j * n + i); }
  std::size_t horizontal_edge(int i, int j) const noexcept {
    return static_cast<std::size_t>(j) * (n - 1) + i;
  }
  std::size_t vertical_edge(int i, int j) const noexcept {
    return static_cast<std::size_t>(n) * (n - 1) + static_cast<std::size_t>(j) * n + i;
  }
  /// Endpoints (a, b) of edge e with a < b.
  std::pair<std::uint32_t, std::uint32_t> endpoints(std::size_t e) const noexcept;
};

struct LatticeConfig {
  int n = 0;
  double p = 0.0;
  Placement placement = Placement::edge_midpoints;
  std::vector<std::uint8_t> occupied;  ///< 2n(n-1) midpoints or n^2 sites
  SeedSpec seed{};

  Geometry geometry() const noexcept { return {n}; }
  std::size_t occupied_count() const;
};

/// Independent thinning with probability p of every candidate location.
LatticeConfig gen_config(int n, double p, Placement placement, const SeedSpec& seed);

/// Uniform marks for every candidate location; occupancy at p is mark < p,
/// which couples configurations across p.
std::vector<double> location_marks(int n, Placement placement, const SeedSpec& seed);
LatticeConfig config_from_marks(int n, double p, Placement placement, std::span<const double> marks,
                                const SeedSpec& seed = {});

struct LatticeGraph {
  int n = 0;
  Rule rule = Rule::analogy;
  Placement placement = Placement::edge_midpoints;
  std::vector<std::uint8_t> basic;     ///< open in both directions
  std::vector<std::uint8_t> enhanced;  ///< open in at least one direction
  std::vector<std::uint8_t> can_send;  ///< geometric rule: site keeps its out-edges

  Geometry geometry() const noexcept { return {n}; }
  /// Edge set used for percolation: basic for sites, enhanced for midpoints.
  const std::vector<std::uint8_t>& open() const noexcept {
    return placement == Placement::sites ? basic : enhanced;
  }
};

LatticeGraph build_lattice_graph(const LatticeConfig& cfg, Rule rule, Ball ball = Ball::open);

/// True iff an open cluster joins the two opposite boundary columns (rows).
bool crosses(const LatticeGraph& g, Direction direction);

struct CrossingEstimate {
  double p;
  int n;
  int runs;
  int crossings;
  double fraction;
  double ci_lo;
  double ci_hi;
};

/// Fraction of independent configurations with a horizontal crossing,
/// with a Wilson 95% interval.
CrossingEstimate crossing_probability(int n, double p, Placement placement, Rule rule, Ball ball,
                                      int runs, std::uint64_t master_seed, unsigned workers = 1);

struct PcSearch {
  Placement placement = Placement::edge_midpoints;
  Rule rule = Rule::analogy;
  Ball ball = Ball::open;
  std::vector<int> ladder{64, 128, 256};
  int runs = 200;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
};

/// Critical occupancy p at which the crossing probability is 1/2.
ThresholdEstimate estimate_pc(const PcSearch& search);

std::string to_string(Placement p);
std::string to_string(Rule r);
std::string to_string(Ball b);
Placement parse_placement(const std::string& s);
Rule parse_rule(const std::string& s);
Ball parse_ball(const std::string& s);

}  // namespace secgraph::lattice
