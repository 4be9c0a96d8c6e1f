#include "secgraph/secrecy_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include <json.hpp>

#include "secgraph/disjoint_sets.hpp"
#include "secgraph/error.hpp"
#include "secgraph/spatial_grid.hpp"

namespace secgraph {

namespace {

void check_inputs(const PointSet& goods, const PointSet& eaves, double r) {
  detail::require(!std::isnan(r) && r > 0.0, "range r must be > 0");
  detail::require(std::isfinite(r) || !eaves.empty(),
                  "r = inf with no eavesdroppers gives a complete graph");
  detail::require(goods.window.compatible_with(eaves.window),
                  "goods and eavesdroppers must share window side and boundary type");
  detail::require(goods.size() < std::numeric_limits<NodeId>::max(), "too many nodes");
}

std::vector<NodeId> sorted_nodes(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

SecrecyGraph::SecrecyGraph(PointSet goods, PointSet eaves, double range, std::vector<double> guard,
                           std::vector<std::uint32_t> offsets, std::vector<NodeId> targets)
    : goods_(std::move(goods)),
      eaves_(std::move(eaves)),
      range_(range),
      guard_(std::move(guard)),
      offsets_(std::move(offsets)),
      targets_(std::move(targets)) {}

bool SecrecyGraph::has_edge(NodeId x, NodeId y) const {
  const auto nb = out_neighbors(x);
  return std::binary_search(nb.begin(), nb.end(), y);
}

bool SecrecyGraph::is_interior(NodeId x) const {
  const Window& w = goods_.window;
  if (w.is_torus()) return true;
  const Point p = goods_[x];
  if (!w.in_core(p)) return false;
  return w.distance_to_edge(p) >= std::min(range_, guard_[x]);
}

SecrecyGraph build_directed(PointSet goods, PointSet eaves, double r) {
  check_inputs(goods, eaves, r);
  auto guard = guard_radii(goods, eaves, goods.window);

  const Window& w = goods.window;
  const GridIndex grid(goods.points, w, default_cell_size(eaves.intensity, r, w.extent()));

  std::vector<std::uint32_t> offsets(goods.size() + 1, 0);
  std::vector<NodeId> targets;
  targets.reserve(goods.size() * 4);
  std::vector<NodeId> scratch;
  for (std::size_t i = 0; i < goods.size(); ++i) {
    const double reach = std::min(r, guard[i]);
    const double guard_i = guard[i];
    scratch.clear();
    grid.for_each_within(goods[i], reach, [&](std::uint32_t j, double d) {
      if (j != i && d <= r && d < guard_i) scratch.push_back(j);
    });
    std::sort(scratch.begin(), scratch.end());
    targets.insert(targets.end(), scratch.begin(), scratch.end());
    offsets[i + 1] = static_cast<std::uint32_t>(targets.size());
  }
  return SecrecyGraph(std::move(goods), std::move(eaves), r, std::move(guard), std::move(offsets),
                      std::move(targets));
}

SecrecyGraph build_directed_bruteforce(PointSet goods, PointSet eaves, double r) {
  check_inputs(goods, eaves, r);
  const Window& w = goods.window;
  auto guard = guard_radii_bruteforce(goods, eaves, w);
  std::vector<std::uint32_t> offsets(goods.size() + 1, 0);
  std::vector<NodeId> targets;
  for (std::size_t i = 0; i < goods.size(); ++i) {
    for (std::size_t j = 0; j < goods.size(); ++j) {
      if (i == j) continue;
      const double d = w.distance(goods[i], goods[j]);
      if (d > r) continue;
      bool blocked = false;
      for (const auto& e : eaves.points) {
        // closed ball of radius d around the transmitter
        if (w.distance(goods[i], e) <= d) {
          blocked = true;
          break;
        }
      }
      if (!blocked) targets.push_back(static_cast<NodeId>(j));
    }
    offsets[i + 1] = static_cast<std::uint32_t>(targets.size());
  }
  return SecrecyGraph(std::move(goods), std::move(eaves), r, std::move(guard), std::move(offsets),
                      std::move(targets));
}

EdgeSets derive_edge_sets(const SecrecyGraph& g) {
  EdgeSets es;
  es.directed_count = g.edge_count();
  for (NodeId x = 0; x < g.size(); ++x) {
    for (const NodeId y : g.out_neighbors(x)) {
      if (g.has_edge(y, x)) {
        if (x < y) es.bidirectional.emplace_back(x, y);
      } else {
        es.one_way.emplace_back(x, y);
      }
    }
  }
  return es;
}

namespace {

std::vector<double> pmf_of(const std::vector<std::uint32_t>& deg, const std::vector<bool>& keep,
                           std::size_t count) {
  std::vector<double> pmf;
  if (count == 0) return pmf;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (!keep[i]) continue;
    if (deg[i] >= pmf.size()) pmf.resize(deg[i] + 1, 0.0);
    pmf[deg[i]] += 1.0;
  }
  for (auto& v : pmf) v /= static_cast<double>(count);
  return pmf;
}

double mean_of(const std::vector<std::uint32_t>& deg, const std::vector<bool>* keep,
               std::size_t count) {
  if (count == 0) return 0.0;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (!keep || (*keep)[i]) sum += deg[i];
  return static_cast<double>(sum) / static_cast<double>(count);
}

}  // namespace

DegreeSummary degree_summary(const SecrecyGraph& g) {
  const std::size_t n = g.size();
  DegreeSummary s;
  s.in.assign(n, 0);
  s.out.assign(n, 0);
  s.basic.assign(n, 0);
  s.enhanced.assign(n, 0);
  s.interior.assign(n, false);

  for (NodeId x = 0; x < n; ++x) {
    const auto nb = g.out_neighbors(x);
    s.out[x] = static_cast<std::uint32_t>(nb.size());
    for (const NodeId y : nb) {
      ++s.in[y];
      if (g.has_edge(y, x)) ++s.basic[x];
    }
  }
  for (NodeId x = 0; x < n; ++x) {
    s.enhanced[x] = s.in[x] + s.out[x] - s.basic[x];
    s.interior[x] = g.is_interior(x);
    if (s.interior[x]) ++s.interior_count;
  }

  const auto m = s.interior_count;
  s.pmf_in = pmf_of(s.in, s.interior, m);
  s.pmf_out = pmf_of(s.out, s.interior, m);
  s.pmf_basic = pmf_of(s.basic, s.interior, m);
  s.pmf_enhanced = pmf_of(s.enhanced, s.interior, m);
  s.means = {mean_of(s.in, &s.interior, m), mean_of(s.out, &s.interior, m),
             mean_of(s.basic, &s.interior, m), mean_of(s.enhanced, &s.interior, m)};
  s.means_all = {mean_of(s.in, nullptr, n), mean_of(s.out, nullptr, n),
                 mean_of(s.basic, nullptr, n), mean_of(s.enhanced, nullptr, n)};
  const auto p0 = [](const std::vector<double>& pmf) { return pmf.empty() ? 0.0 : pmf[0]; };
  s.isolated_in = p0(s.pmf_in);
  s.isolated_out = p0(s.pmf_out);
  s.isolated_basic = p0(s.pmf_basic);
  s.isolated_enhanced = p0(s.pmf_enhanced);
  return s;
}

EdgeLengthSample edge_lengths(const SecrecyGraph& g) {
  EdgeLengthSample s;
  s.lambda = g.lambda();
  s.range = g.range();
  const auto& pts = g.goods();
  for (NodeId x = 0; x < g.size(); ++x) {
    if (!g.is_interior(x)) continue;
    for (const NodeId y : g.out_neighbors(x)) s.lengths.push_back(g.window().distance(pts[x], pts[y]));
  }
  return s;
}

std::vector<NodeId> out_component(const SecrecyGraph& g, NodeId start) {
  detail::require(start < g.size(), "start node out of range");
  std::vector<bool> seen(g.size(), false);
  std::vector<NodeId> comp{start};
  std::deque<NodeId> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    for (const NodeId y : g.out_neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      comp.push_back(y);
      queue.push_back(y);
    }
  }
  return sorted_nodes(std::move(comp));
}

std::vector<NodeId> undirected_components(const EdgeSets& edges, std::size_t node_count,
                                          EdgeKind which) {
  DisjointSets ds(node_count);
  for (const auto& [a, b] : edges.bidirectional) ds.unite(a, b);
  if (which == EdgeKind::enhanced)
    for (const auto& [a, b] : edges.one_way) ds.unite(a, b);

  std::vector<NodeId> smallest(node_count, std::numeric_limits<NodeId>::max());
  for (NodeId x = 0; x < node_count; ++x) {
    auto& s = smallest[ds.find(x)];
    s = std::min(s, x);
  }
  std::vector<NodeId> label(node_count);
  for (NodeId x = 0; x < node_count; ++x) label[x] = smallest[ds.find(x)];
  return label;
}

std::string graph_to_json(const SecrecyGraph& g) {
  using nlohmann::json;
  json params = {
      {"lambda", g.lambda()},
      {"L", g.window().side()},
      {"seed", {{"master", g.goods().seed.master_seed}, {"run", g.goods().seed.run_index}}},
  };
  params["r"] = std::isfinite(g.range()) ? json(g.range()) : json("inf");
  json goods = json::array(), eaves = json::array(), edges = json::array();
  for (const auto& p : g.goods().points) goods.push_back({p.x, p.y});
  for (const auto& p : g.eaves().points) eaves.push_back({p.x, p.y});
  for (NodeId x = 0; x < g.size(); ++x)
    for (const NodeId y : g.out_neighbors(x)) edges.push_back({x, y});
  json doc = {{"params", params}, {"goods", goods}, {"eaves", eaves}, {"out_edges", edges}};
  return doc.dump();
}

}  // namespace secgraph
