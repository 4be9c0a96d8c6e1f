#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "secgraph/point_process.hpp"

namespace secgraph {

using NodeId = std::uint32_t;

/// Directed secrecy graph over good nodes: x -> y is present iff
/// dist(x, y) <= r and dist(x, y) < R_x, where R_x is the distance from x
/// to its nearest eavesdropper. Immutable once built.
class SecrecyGraph {
 public:
  SecrecyGraph(PointSet goods, PointSet eaves, double range, std::vector<double> guard,
               std::vector<std::uint32_t> offsets, std::vector<NodeId> targets);

  const PointSet& goods() const noexcept { return goods_; }
  const PointSet& eaves() const noexcept { return eaves_; }
  const Window& window() const noexcept { return goods_.window; }
  double range() const noexcept { return range_; }
  double lambda() const noexcept { return eaves_.intensity; }

  std::size_t size() const noexcept { return goods_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size(); }
  double guard_radius(NodeId x) const { return guard_[x]; }
  std::span<const double> guard_radii() const noexcept { return guard_; }

  /// Out-neighbours of x in ascending index order.
  std::span<const NodeId> out_neighbors(NodeId x) const {
    return {targets_.data() + offsets_[x], targets_.data() + offsets_[x + 1]};
  }
  bool has_edge(NodeId x, NodeId y) const;

  /// True when x's whole out-neighbourhood (radius min(r, R_x)) lies inside
  /// the sampled region and x itself sits in the core window. Statistics
  /// restricted to interior nodes match the infinite-plane model.
  bool is_interior(NodeId x) const;

 private:
  PointSet goods_;
  PointSet eaves_;
  double range_;
  std::vector<double> guard_;
  std::vector<std::uint32_t> offsets_;
  std::vector<NodeId> targets_;
};

/// r may be +inf (edges limited by guard radii only).
SecrecyGraph build_directed(PointSet goods, PointSet eaves, double r);

/// O(n^2 m) reference construction used by tests.
SecrecyGraph build_directed_bruteforce(PointSet goods, PointSet eaves, double r);

struct EdgeSets {
  std::vector<std::pair<NodeId, NodeId>> bidirectional;  ///< E, stored with first < second
  std::vector<std::pair<NodeId, NodeId>> one_way;        ///< E' \ E, as (tail, head)
  std::size_t directed_count = 0;                        ///< |vec E|

  std::size_t basic_count() const noexcept { return bidirectional.size(); }
  std::size_t enhanced_count() const noexcept { return bidirectional.size() + one_way.size(); }
};

EdgeSets derive_edge_sets(const SecrecyGraph& g);

struct DegreeMeans {
  double in = 0.0;
  double out = 0.0;
  double basic = 0.0;
  double enhanced = 0.0;
};

struct DegreeSummary {
  std::vector<std::uint32_t> in, out, basic, enhanced;  ///< per node, all nodes
  std::vector<bool> interior;
  std::size_t interior_count = 0;

  /// Empirical pmfs over interior nodes (index = degree).
  std::vector<double> pmf_in, pmf_out, pmf_basic, pmf_enhanced;
  DegreeMeans means;      ///< interior nodes
  DegreeMeans means_all;  ///< all nodes; basic + enhanced == 2 * out exactly
  double isolated_out = 0.0, isolated_in = 0.0, isolated_basic = 0.0, isolated_enhanced = 0.0;
};

DegreeSummary degree_summary(const SecrecyGraph& g);

struct EdgeLengthSample {
  std::vector<double> lengths;  ///< directed edges leaving interior nodes
  double lambda = 0.0;
  double range = 0.0;
};

EdgeLengthSample edge_lengths(const SecrecyGraph& g);

/// Nodes reachable from start along directed edges (start included), sorted.
std::vector<NodeId> out_component(const SecrecyGraph& g, NodeId start);

enum class EdgeKind { basic, enhanced };

/// Component label per node; a label is the smallest node index in its component.
std::vector<NodeId> undirected_components(const EdgeSets& edges, std::size_t node_count,
                                          EdgeKind which);

/// Deterministic JSON dump: {params, goods, eaves, out_edges}.
std::string graph_to_json(const SecrecyGraph& g);

}  // namespace secgraph
