#include "secgraph/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "secgraph/error.hpp"
#include "secgraph/spatial_grid.hpp"

namespace secgraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_side(double side) {
  detail::require(std::isfinite(side) && side > 0.0, "window side must be finite and > 0");
}

}  // namespace

Window Window::plain(double side) {
  check_side(side);
  return Window(side, Boundary::plain, 0.0);
}

Window Window::torus(double side) {
  check_side(side);
  return Window(side, Boundary::torus, 0.0);
}

Window Window::inflated(double side, double margin) {
  check_side(side);
  detail::require(std::isfinite(margin) && margin >= 0.0, "window margin must be finite and >= 0");
  return Window(side, Boundary::inflated, margin);
}

bool Window::contains(Point p) const noexcept {
  if (is_torus()) return p.x >= 0.0 && p.x < side_ && p.y >= 0.0 && p.y < side_;
  return p.x >= lo() && p.x <= hi() && p.y >= lo() && p.y <= hi();
}

bool Window::in_core(Point p) const noexcept {
  return p.x >= 0.0 && p.x <= side_ && p.y >= 0.0 && p.y <= side_;
}

double Window::distance(Point a, Point b) const noexcept {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  if (is_torus()) {
    dx = std::min(dx, side_ - dx);
    dy = std::min(dy, side_ - dy);
  }
  return std::hypot(dx, dy);
}

double Window::distance_to_edge(Point p) const noexcept {
  if (is_torus()) return kInf;
  return std::min({p.x - lo(), hi() - p.x, p.y - lo(), hi() - p.y});
}

bool Window::compatible_with(const Window& other) const noexcept {
  return side_ == other.side_ && is_torus() == other.is_torus();
}

PointSet sample_ppp(double intensity, const Window& window, const SeedSpec& seed, Stream stream) {
  detail::require(std::isfinite(intensity), "intensity must be finite");
  detail::require(intensity >= 0.0, "intensity must be >= 0");

  PointSet ps;
  ps.intensity = intensity;
  ps.window = window;
  ps.seed = seed;
  if (intensity == 0.0) return ps;

  auto eng = make_engine(seed, stream);
  std::poisson_distribution<long long> count_dist(intensity * window.area());
  const auto n = static_cast<std::size_t>(count_dist(eng));
  ps.points.reserve(n);
  const double lo = window.lo();
  const double ext = window.extent();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = lo + ext * uniform01(eng);
    const double y = lo + ext * uniform01(eng);
    ps.points.push_back({x, y});
  }
  std::sort(ps.points.begin(), ps.points.end());
  return ps;
}

PointSet add_center_node(PointSet ps) {
  const Point c = ps.window.center();
  const auto it = std::lower_bound(ps.points.begin(), ps.points.end(), c);
  const auto idx = static_cast<std::size_t>(it - ps.points.begin());
  ps.points.insert(it, c);
  ps.origin = idx;
  return ps;
}

double pairwise_distance(Point p, Point q, const Window& window) { return window.distance(p, q); }

std::vector<double> guard_radii(const PointSet& goods, const PointSet& eaves,
                                const Window& window) {
  std::vector<double> out(goods.size(), kInf);
  if (eaves.empty()) return out;
  detail::require(eaves.window.compatible_with(window), "eavesdropper window incompatible");
  const double cell = default_cell_size(eaves.intensity, kInf, eaves.window.extent());
  const GridIndex grid(eaves.points, eaves.window, cell);
  for (std::size_t i = 0; i < goods.size(); ++i) out[i] = grid.nearest_distance(goods[i]);
  return out;
}

std::vector<double> guard_radii_bruteforce(const PointSet& goods, const PointSet& eaves,
                                           const Window& window) {
  std::vector<double> out(goods.size(), kInf);
  for (std::size_t i = 0; i < goods.size(); ++i)
    for (const auto& e : eaves.points) out[i] = std::min(out[i], window.distance(goods[i], e));
  return out;
}

PointSet thin(const PointSet& ps, std::span<const double> marks, double keep) {
  detail::require(marks.size() == ps.size(), "one mark per point required");
  PointSet out;
  out.intensity = ps.intensity * std::clamp(keep, 0.0, 1.0);
  out.window = ps.window;
  out.seed = ps.seed;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (marks[i] < keep) out.points.push_back(ps[i]);
  return out;
}

std::vector<double> draw_marks(const PointSet& ps) {
  auto eng = make_engine(ps.seed, Stream::marks);
  std::vector<double> marks(ps.size());
  for (auto& m : marks) m = uniform01(eng);
  return marks;
}

double degree_margin(double lambda, double r, double side) {
  const double r_fin = std::isfinite(r) ? r : 0.0;
  if (lambda <= 0.0) return r_fin;
  return std::max(r_fin, std::min(5.0 / std::sqrt(lambda), side / 2.0));
}

double default_cell_size(double lambda, double r, double side) {
  double cell = 0.0;
  if (std::isfinite(r)) cell = r;
  if (lambda > 0.0) cell = std::max(cell, 1.0 / std::sqrt(lambda));
  if (cell <= 0.0) cell = side;
  return std::clamp(cell, side / 1024.0, side);
}

void write_points_csv(std::ostream& os, const PointSet& ps) {
  const auto old = os.precision(17);
  os << "x,y\n";
  for (const auto& p : ps.points) os << p.x << ',' << p.y << '\n';
  os.precision(old);
}

}  // namespace secgraph
