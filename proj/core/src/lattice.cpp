#include "secgraph/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "secgraph/disjoint_sets.hpp"
#include "secgraph/error.hpp"
#include "secgraph/parallel.hpp"
#include "secgraph/stats.hpp"

namespace secgraph::lattice {

std::pair<std::uint32_t, std::uint32_t> Geometry::endpoints(std::size_t e) const noexcept {
  const std::size_t horizontal = static_cast<std::size_t>(n) * (n - 1);
  if (e < horizontal) {
    const int j = static_cast<int>(e / (n - 1));
    const int i = static_cast<int>(e % (n - 1));
    return {site(i, j), site(i + 1, j)};
  }
  e -= horizontal;
  const int j = static_cast<int>(e / n);
  const int i = static_cast<int>(e % n);
  return {site(i, j), site(i, j + 1)};
}

std::size_t LatticeConfig::occupied_count() const {
  return static_cast<std::size_t>(std::count(occupied.begin(), occupied.end(), std::uint8_t{1}));
}

namespace {

std::size_t location_count(int n, Placement placement) {
  const Geometry g{n};
  return placement == Placement::sites ? g.site_count() : g.edge_count();
}

void check_config_args(int n, double p) {
  detail::require(n >= 2, "lattice side must be >= 2");
  detail::require(p >= 0.0 && p <= 1.0, "occupancy p must lie in [0, 1]");
}

// Sites that keep their out-edges under the geometric rule, given the
// occupancy test occ(location).
template <class Occupied>
std::vector<std::uint8_t> senders(const Geometry& geo, Placement placement, Ball ball,
                                  const Occupied& occ) {
  const int n = geo.n;
  std::vector<std::uint8_t> can_send(geo.site_count(), 1);
  if (placement == Placement::edge_midpoints) {
    // Incident midpoints sit at distance 1/2; every other midpoint is at
    // least sqrt(5)/2 > 1 away, so only incident edges matter for either ball.
    for (std::size_t e = 0; e < geo.edge_count(); ++e) {
      if (!occ(e)) continue;
      const auto [a, b] = geo.endpoints(e);
      can_send[a] = 0;
      can_send[b] = 0;
    }
    return can_send;
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const auto s = geo.site(i, j);
      bool blocked = occ(s);
      if (ball == Ball::closed && !blocked) {
        blocked = (i > 0 && occ(geo.site(i - 1, j))) || (i + 1 < n && occ(geo.site(i + 1, j))) ||
                  (j > 0 && occ(geo.site(i, j - 1))) || (j + 1 < n && occ(geo.site(i, j + 1)));
      }
      can_send[s] = blocked ? 0 : 1;
    }
  }
  return can_send;
}

template <class Occupied>
LatticeGraph build_graph(int n, Placement placement, Rule rule, Ball ball, const Occupied& occ) {
  const Geometry geo{n};
  LatticeGraph g;
  g.n = n;
  g.rule = rule;
  g.placement = placement;
  g.basic.assign(geo.edge_count(), 0);
  g.enhanced.assign(geo.edge_count(), 0);

  if (rule == Rule::analogy) {
    for (std::size_t e = 0; e < geo.edge_count(); ++e) {
      bool open;
      if (placement == Placement::edge_midpoints) {
        open = !occ(e);
      } else {
        const auto [a, b] = geo.endpoints(e);
        open = !occ(a) && !occ(b);
      }
      g.basic[e] = g.enhanced[e] = open ? 1 : 0;
    }
    return g;
  }

  g.can_send = senders(geo, placement, ball, occ);
  for (std::size_t e = 0; e < geo.edge_count(); ++e) {
    const auto [a, b] = geo.endpoints(e);
    g.basic[e] = (g.can_send[a] && g.can_send[b]) ? 1 : 0;
    g.enhanced[e] = (g.can_send[a] || g.can_send[b]) ? 1 : 0;
  }
  return g;
}

bool crosses_open(const Geometry& geo, const std::vector<std::uint8_t>& open, Direction direction) {
  const int n = geo.n;
  const auto sites = static_cast<std::uint32_t>(geo.site_count());
  const std::uint32_t src = sites, dst = sites + 1;
  DisjointSets ds(sites + 2);
  for (int k = 0; k < n; ++k) {
    if (direction == Direction::horizontal) {
      ds.unite(src, geo.site(0, k));
      ds.unite(dst, geo.site(n - 1, k));
    } else {
      ds.unite(src, geo.site(k, 0));
      ds.unite(dst, geo.site(k, n - 1));
    }
  }
  for (std::size_t e = 0; e < open.size(); ++e) {
    if (!open[e]) continue;
    const auto [a, b] = geo.endpoints(e);
    ds.unite(a, b);
  }
  return ds.connected(src, dst);
}

}  // namespace

std::vector<double> location_marks(int n, Placement placement, const SeedSpec& seed) {
  detail::require(n >= 2, "lattice side must be >= 2");
  auto eng = make_engine(seed, Stream::lattice);
  std::vector<double> marks(location_count(n, placement));
  for (auto& m : marks) m = uniform01(eng);
  return marks;
}

LatticeConfig config_from_marks(int n, double p, Placement placement, std::span<const double> marks,
                                const SeedSpec& seed) {
  check_config_args(n, p);
  detail::require(marks.size() == location_count(n, placement), "mark count does not match lattice");
  LatticeConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.placement = placement;
  cfg.seed = seed;
  cfg.occupied.resize(marks.size());
  for (std::size_t k = 0; k < marks.size(); ++k) cfg.occupied[k] = marks[k] < p ? 1 : 0;
  return cfg;
}

LatticeConfig gen_config(int n, double p, Placement placement, const SeedSpec& seed) {
  check_config_args(n, p);
  return config_from_marks(n, p, placement, location_marks(n, placement, seed), seed);
}

LatticeGraph build_lattice_graph(const LatticeConfig& cfg, Rule rule, Ball ball) {
  detail::require(cfg.occupied.size() == location_count(cfg.n, cfg.placement),
                  "occupancy size does not match lattice");
  const auto& occ = cfg.occupied;
  return build_graph(cfg.n, cfg.placement, rule, ball, [&](std::size_t k) { return occ[k] != 0; });
}

bool crosses(const LatticeGraph& g, Direction direction) {
  return crosses_open(g.geometry(), g.open(), direction);
}

CrossingEstimate crossing_probability(int n, double p, Placement placement, Rule rule, Ball ball,
                                      int runs, std::uint64_t master_seed, unsigned workers) {
  check_config_args(n, p);
  detail::require(runs > 0, "runs must be > 0");
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(runs), 0);
  parallel_for(hit.size(), workers, [&](std::size_t run) {
    const auto cfg = gen_config(n, p, placement, {master_seed, run});
    hit[run] = crosses(build_lattice_graph(cfg, rule, ball), Direction::horizontal) ? 1 : 0;
  });
  const auto k = static_cast<int>(std::count(hit.begin(), hit.end(), std::uint8_t{1}));
  const auto ci = stats::wilson_interval(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(runs));
  return {p, n, runs, k, static_cast<double>(k) / runs, ci.lo, ci.hi};
}

ThresholdEstimate estimate_pc(const PcSearch& search) {
  detail::require(search.runs >= 30, "threshold search needs at least 30 runs per window");
  detail::require(!search.ladder.empty(), "window ladder is empty");
  ThresholdEstimate est;
  est.direction = "p_c";
  est.search_lo = 0.0;
  est.search_hi = 1.0;

  for (const int n : search.ladder) {
    detail::require(n >= 2, "lattice side must be >= 2");
    std::vector<double> thresholds(static_cast<std::size_t>(search.runs));
    std::vector<int> steps(thresholds.size(), 0);
    parallel_for(thresholds.size(), search.workers, [&](std::size_t run) {
      const SeedSpec seed{search.master_seed, static_cast<std::uint64_t>(n) * 1'000'003u + run};
      const auto marks = location_marks(n, search.placement, seed);
      std::vector<std::uint32_t> order(marks.size());
      std::iota(order.begin(), order.end(), 0u);
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return marks[a] < marks[b]; });
      std::vector<std::uint32_t> rank(marks.size());
      for (std::uint32_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

      // With the k lowest marks occupied, p lies in (mark_(k-1), mark_(k)].
      const auto crossing_with = [&](std::size_t k) {
        const auto g = build_graph(n, search.placement, search.rule, search.ball,
                                   [&](std::size_t loc) { return rank[loc] < k; });
        return crosses(g, Direction::horizontal);
      };
      const std::size_t k = last_true(marks.size(), crossing_with, &steps[run]);
      thresholds[run] = k < marks.size() ? marks[order[k]] : 1.0;
    });
    est.bisection_steps = *std::max_element(steps.begin(), steps.end());
    est.per_window.push_back(summarize_window(n, thresholds, 0.0, 1.0, search.master_seed + n));
  }
  finalize_estimate(est);
  return est;
}

std::string to_string(Placement p) { return p == Placement::sites ? "sites" : "midpoints"; }
std::string to_string(Rule r) { return r == Rule::analogy ? "analogy" : "geometric"; }
std::string to_string(Ball b) { return b == Ball::open ? "open" : "closed"; }

Placement parse_placement(const std::string& s) {
  if (s == "midpoints" || s == "edge_midpoints") return Placement::edge_midpoints;
  if (s == "sites") return Placement::sites;
  throw ParameterError("unknown placement '" + s + "' (midpoints|sites)");
}

Rule parse_rule(const std::string& s) {
  if (s == "analogy") return Rule::analogy;
  if (s == "geometric" || s == "geometric_strict") return Rule::geometric_strict;
  throw ParameterError("unknown rule '" + s + "' (analogy|geometric)");
}

Ball parse_ball(const std::string& s) {
  if (s == "open") return Ball::open;
  if (s == "closed") return Ball::closed;
  throw ParameterError("unknown ball '" + s + "' (open|closed)");
}

}  // namespace secgraph::lattice
