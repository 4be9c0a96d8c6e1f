#include <gtest/gtest.h>

#include <cmath>
#include <deque>
#include <random>
#include <set>

#include <json.hpp>

#include "secgraph/analytics.hpp"
#include "secgraph/degree_experiment.hpp"
#include "secgraph/error.hpp"
#include "secgraph/secrecy_graph.hpp"
#include "secgraph/stats.hpp"

using namespace secgraph;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

PointSet make_set(std::vector<Point> pts, const Window& w, double intensity = 1.0) {
  PointSet ps;
  std::sort(pts.begin(), pts.end());
  ps.points = std::move(pts);
  ps.window = w;
  ps.intensity = intensity;
  return ps;
}

std::set<std::pair<NodeId, NodeId>> directed_edges(const SecrecyGraph& g) {
  std::set<std::pair<NodeId, NodeId>> e;
  for (NodeId x = 0; x < g.size(); ++x)
    for (const NodeId y : g.out_neighbors(x)) e.emplace(x, y);
  return e;
}

void expect_edge_rule(const SecrecyGraph& g) {
  const auto& w = g.window();
  for (NodeId x = 0; x < g.size(); ++x) {
    const auto nb = g.out_neighbors(x);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
    for (const NodeId y : nb) {
      ASSERT_NE(x, y);
      const double d = w.distance(g.goods()[x], g.goods()[y]);
      EXPECT_LE(d, g.range());
      EXPECT_LT(d, g.guard_radius(x));
    }
  }
}

struct Instance {
  Window window;
  double lambda;
  double r;
};

// Windows of area 144, so instances stay near the n <= 200 brute-force scale.
std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (const auto& w : {Window::plain(12.0), Window::inflated(9.0, 1.5), Window::torus(12.0)})
    for (const double lambda : {0.0, 0.1, 0.5, 2.0})
      for (const double r : {0.7, 1.5, kInf})
        if (!(lambda == 0.0 && std::isinf(r))) out.push_back({w, lambda, r});
  return out;
}

SecrecyGraph sample_graph(const Instance& in, std::uint64_t run) {
  const SeedSpec s{2024, run};
  return build_directed(sample_ppp(1.0, in.window, s), sample_ppp(in.lambda, in.window, s, Stream::eaves),
                        in.r);
}

// Transitive closure by repeated boolean squaring.
std::vector<std::vector<bool>> closure(const SecrecyGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (NodeId x = 0; x < n; ++x) {
    m[x][x] = true;
    for (const NodeId y : g.out_neighbors(x)) m[x][y] = true;
  }
  for (std::size_t step = 1; step < n; step *= 2) {
    auto next = m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (m[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (m[k][j]) next[i][j] = true;
    m = std::move(next);
  }
  return m;
}

}  // namespace

TEST(BuildDirected, RejectsBadRange) {
  const auto w = Window::plain(5.0);
  const auto goods = sample_ppp(1.0, w, {1, 0});
  const auto none = sample_ppp(0.0, w, {1, 0}, Stream::eaves);
  EXPECT_THROW(build_directed(goods, none, 0.0), ParameterError);
  EXPECT_THROW(build_directed(goods, none, -1.0), ParameterError);
  EXPECT_THROW(build_directed(goods, none, kInf), ParameterError);
}

TEST(BuildDirected, NoEavesdroppersIsDiskGraph) {
  const auto w = Window::plain(15.0);
  const auto goods = sample_ppp(1.0, w, {3, 0});
  const auto g = build_directed(goods, sample_ppp(0.0, w, {3, 0}, Stream::eaves), 1.2);
  std::set<std::pair<NodeId, NodeId>> disk;
  for (NodeId i = 0; i < goods.size(); ++i)
    for (NodeId j = 0; j < goods.size(); ++j)
      if (i != j && std::hypot(goods[i].x - goods[j].x, goods[i].y - goods[j].y) <= 1.2) disk.emplace(i, j);
  EXPECT_EQ(directed_edges(g), disk);
  const auto s = degree_summary(g);
  for (NodeId x = 0; x < g.size(); ++x) {
    EXPECT_EQ(s.in[x], s.out[x]);
    EXPECT_EQ(s.basic[x], s.out[x]);
    EXPECT_EQ(s.enhanced[x], s.out[x]);
  }
}

TEST(BuildDirected, HandBuiltInstance) {
  // a, b, c on a line; the eavesdropper sits beyond c.
  const auto w = Window::plain(10.0);
  const auto g = build_directed(make_set({{1, 5}, {2, 5}, {3, 5}}, w), make_set({{3.6, 5}}, w), kInf);
  // R_a = 2.6, R_b = 1.6, R_c = 0.6
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.out_neighbors(2).empty());
  const auto es = derive_edge_sets(g);
  EXPECT_EQ(es.bidirectional, (std::vector<std::pair<NodeId, NodeId>>{{0, 1}}));
  EXPECT_EQ(es.one_way, (std::vector<std::pair<NodeId, NodeId>>{{0, 2}, {1, 2}}));
  EXPECT_EQ(es.basic_count() + es.enhanced_count(), es.directed_count);
}

TEST(BuildDirected, EavesdropperAtExactDistanceBlocks) {
  const auto w = Window::plain(10.0);
  const auto g = build_directed(make_set({{1, 1}, {2, 1}}, w), make_set({{1, 2}}, w), kInf);
  EXPECT_FALSE(g.has_edge(0, 1));  // R_x = 1 = distance
  EXPECT_TRUE(g.has_edge(1, 0));   // R_y = sqrt(2) > 1
  EXPECT_FALSE(build_directed_bruteforce(make_set({{1, 1}, {2, 1}}, w), make_set({{1, 2}}, w), kInf)
                   .has_edge(0, 1));
}

TEST(DeriveEdgeSets, SymmetricPair) {
  const auto w = Window::plain(10.0);
  const auto g = build_directed(make_set({{1, 1}, {2, 1}}, w), make_set({{9, 9}}, w), kInf);
  const auto es = derive_edge_sets(g);
  EXPECT_EQ(es.bidirectional.size(), 1u);
  EXPECT_TRUE(es.one_way.empty());
  EXPECT_EQ(es.enhanced_count(), 1u);
}

TEST(DeriveEdgeSets, OneWayPair) {
  // Eavesdropper on the far side of y: x reaches y, y cannot reach x.
  const auto w = Window::plain(10.0);
  const auto g = build_directed(make_set({{1, 1}, {3, 1}}, w), make_set({{3.5, 1}}, w), kInf);
  const auto es = derive_edge_sets(g);
  EXPECT_TRUE(es.bidirectional.empty());
  EXPECT_EQ(es.one_way, (std::vector<std::pair<NodeId, NodeId>>{{0, 1}}));
}

TEST(BuildDirected, MatchesBruteForceOnRandomInstances) {
  std::uint64_t run = 0;
  for (const auto& in : instances()) {
    const SeedSpec s{77, run++};
    const auto goods = sample_ppp(1.0, in.window, s);
    ASSERT_LE(goods.size(), 200u);
    const auto eaves = sample_ppp(in.lambda, in.window, s, Stream::eaves);
    const auto fast = build_directed(goods, eaves, in.r);
    const auto slow = build_directed_bruteforce(goods, eaves, in.r);
    EXPECT_EQ(directed_edges(fast), directed_edges(slow));
    expect_edge_rule(fast);
  }
}

TEST(Properties, PartitionIdentityAndDegreeChain) {
  std::uint64_t run = 0;
  for (const auto& in : instances()) {
    const auto g = sample_graph(in, run++);
    const auto es = derive_edge_sets(g);
    EXPECT_EQ(es.basic_count() + es.enhanced_count(), es.directed_count);
    const auto s = degree_summary(g);
    std::uint64_t sum_in = 0, sum_out = 0, sum_b = 0, sum_e = 0;
    for (NodeId x = 0; x < g.size(); ++x) {
      const auto lo = std::min(s.in[x], s.out[x]), hi = std::max(s.in[x], s.out[x]);
      EXPECT_LE(s.basic[x], lo);
      EXPECT_LE(hi, s.enhanced[x]);
      EXPECT_LE(s.enhanced[x], s.in[x] + s.out[x]);
      sum_in += s.in[x];
      sum_out += s.out[x];
      sum_b += s.basic[x];
      sum_e += s.enhanced[x];
    }
    EXPECT_EQ(sum_in, g.edge_count());
    EXPECT_EQ(sum_out, g.edge_count());
    EXPECT_EQ(sum_b + sum_e, 2 * sum_out);
    EXPECT_DOUBLE_EQ(s.means_all.basic + s.means_all.enhanced, 2.0 * s.means_all.out);
  }
}

TEST(Properties, AddingEavesdropperShrinksAdjacency) {
  std::mt19937_64 eng(5);
  std::uint64_t run = 0;
  for (const auto& in : instances()) {
    const SeedSpec s{31, run++};
    const auto goods = sample_ppp(1.0, in.window, s);
    const auto eaves = sample_ppp(in.lambda, in.window, s, Stream::eaves);
    std::uniform_real_distribution<double> u(in.window.lo(), in.window.hi());
    auto more = eaves;
    more.points.push_back({u(eng), u(eng)});
    std::sort(more.points.begin(), more.points.end());
    const auto before = build_directed(goods, eaves, in.r);
    const auto after = build_directed(goods, more, in.r);
    for (NodeId x = 0; x < goods.size(); ++x)
      for (const NodeId y : after.out_neighbors(x)) EXPECT_TRUE(before.has_edge(x, y));
  }
}

TEST(Properties, LargerRangeAddsEdges) {
  std::uint64_t run = 0;
  for (const double lambda : {0.0, 0.2, 1.0}) {
    const auto w = Window::plain(14.0);
    const SeedSpec s{13, run++};
    const auto goods = sample_ppp(1.0, w, s);
    const auto eaves = sample_ppp(lambda, w, s, Stream::eaves);
    const auto small = directed_edges(build_directed(goods, eaves, 0.8));
    const auto large = directed_edges(build_directed(goods, eaves, 1.6));
    EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}

TEST(Properties, Deterministic) {
  const Instance in{Window::inflated(12.0, 2.0), 0.3, 1.5};
  EXPECT_EQ(graph_to_json(sample_graph(in, 4)), graph_to_json(sample_graph(in, 4)));
}

TEST(OutComponent, IsolatedAndChain) {
  PointSet goods = make_set({{1, 1}, {2, 1}, {3, 1}}, Window::plain(5.0));
  PointSet eaves = make_set({}, Window::plain(5.0), 0.0);
  // a -> b -> c only
  const SecrecyGraph g(goods, eaves, 5.0, {kInf, kInf, kInf}, {0, 1, 2, 2}, {1, 2});
  EXPECT_EQ(out_component(g, 0), (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(out_component(g, 2), (std::vector<NodeId>{2}));
  const SecrecyGraph empty(goods, eaves, 5.0, {kInf, kInf, kInf}, {0, 0, 0, 0}, {});
  EXPECT_EQ(out_component(empty, 1), (std::vector<NodeId>{1}));
}

TEST(OutComponent, MatchesMatrixClosure) {
  for (std::uint64_t run = 0; run < 6; ++run) {
    const SeedSpec s{55, run};
    const auto w = Window::plain(6.5);
    const auto g = build_directed(sample_ppp(1.0, w, s), sample_ppp(0.3, w, s, Stream::eaves), 1.6);
    ASSERT_LE(g.size(), 60u);
    const auto m = closure(g);
    for (NodeId x = 0; x < g.size(); ++x) {
      std::vector<NodeId> row;
      for (NodeId y = 0; y < g.size(); ++y)
        if (m[x][y]) row.push_back(y);
      EXPECT_EQ(out_component(g, x), row);
    }
  }
}

TEST(UndirectedComponents, NoEdgesGivesSingletons) {
  EdgeSets es;
  const auto label = undirected_components(es, 4, EdgeKind::basic);
  EXPECT_EQ(label, (std::vector<NodeId>{0, 1, 2, 3}));
}

TEST(UndirectedComponents, ForestComponentCount) {
  EdgeSets es;
  es.bidirectional = {{0, 1}, {1, 2}, {3, 4}};
  const auto label = undirected_components(es, 6, EdgeKind::basic);
  EXPECT_EQ(std::set<NodeId>(label.begin(), label.end()).size(), 6u - 3u);
}

TEST(UndirectedComponents, MatchesBfsLabels) {
  for (std::uint64_t run = 0; run < 5; ++run) {
    const Instance in{Window::plain(15.0), 0.2, 2.0};
    const auto g = sample_graph(in, run);
    const auto es = derive_edge_sets(g);
    for (const auto kind : {EdgeKind::basic, EdgeKind::enhanced}) {
      std::vector<std::vector<NodeId>> adj(g.size());
      const auto add = [&](const auto& pairs) {
        for (const auto& [a, b] : pairs) {
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
      };
      add(es.bidirectional);
      if (kind == EdgeKind::enhanced) add(es.one_way);
      std::vector<NodeId> bfs(g.size(), std::numeric_limits<NodeId>::max());
      for (NodeId s = 0; s < g.size(); ++s) {
        if (bfs[s] != std::numeric_limits<NodeId>::max()) continue;
        std::deque<NodeId> q{s};
        bfs[s] = s;
        while (!q.empty()) {
          const auto x = q.front();
          q.pop_front();
          for (const auto y : adj[x])
            if (bfs[y] == std::numeric_limits<NodeId>::max()) {
              bfs[y] = s;
              q.push_back(y);
            }
        }
      }
      EXPECT_EQ(undirected_components(es, g.size(), kind), bfs);
    }
  }
}

TEST(EdgeLengths, TwoNodes) {
  const auto w = Window::torus(10.0);
  const auto g = build_directed(make_set({{1, 1}, {1, 1.7}}, w), make_set({}, w, 0.0), 2.0);
  const auto s = edge_lengths(g);
  ASSERT_EQ(s.lengths.size(), 2u);
  EXPECT_NEAR(s.lengths[0], 0.7, 1e-12);
  EXPECT_NEAR(s.lengths[1], 0.7, 1e-12);
}

TEST(EdgeLengths, BelowGuardAndRange) {
  const auto g = sample_graph({Window::inflated(20.0, 5.0), 0.25, 2.0}, 1);
  const auto s = edge_lengths(g);
  EXPECT_FALSE(s.lengths.empty());
  for (const double l : s.lengths) EXPECT_LE(l, 2.0);
}

TEST(DegreeSummary, InteriorStatisticsMatchFormulasLoosely) {
  DegreeExperimentConfig cfg;
  cfg.lambda = 1.0;
  cfg.r = kInf;
  cfg.side = 40.0;
  cfg.runs = 4;
  const auto ex = run_degree_experiment(cfg);
  EXPECT_TRUE(ex.identity_holds());
  EXPECT_TRUE(ex.chain_holds());
  EXPECT_NEAR(ex.pmf_out()[0], 0.5, 0.03);
}

TEST(DegreeExperiment, CenterNodeIsTypical) {
  // Palm statistics of the added center node agree with per-node averages.
  DegreeExperimentConfig cfg;
  cfg.lambda = 0.2;
  cfg.r = 1.0;
  cfg.side = 12.0;
  cfg.runs = 600;
  cfg.with_center = true;
  const auto ex = run_degree_experiment(cfg);
  std::vector<double> origin_out;
  for (const auto& r : ex.runs) {
    ASSERT_TRUE(r.origin.has_value());
    origin_out.push_back(r.origin->out);
  }
  const double expected = analytics::mean_out_degree({0.2, 1.0});
  EXPECT_LT(std::abs(stats::mean(origin_out) - expected), 4.0 * stats::standard_error(origin_out));
  EXPECT_LT(std::abs(stats::mean(ex.per_run_mean_out()) - expected),
            4.0 * stats::standard_error(ex.per_run_mean_out()) + 0.02);
}

TEST(GraphJson, Shape) {
  const auto g = sample_graph({Window::plain(6.0), 0.5, kInf}, 2);
  const auto doc = nlohmann::json::parse(graph_to_json(g));
  EXPECT_EQ(doc["params"]["r"], "inf");
  EXPECT_EQ(doc["params"]["L"], 6.0);
  EXPECT_EQ(doc["goods"].size(), g.size());
  EXPECT_EQ(doc["eaves"].size(), g.eaves().size());
  EXPECT_EQ(doc["out_edges"].size(), g.edge_count());
}
