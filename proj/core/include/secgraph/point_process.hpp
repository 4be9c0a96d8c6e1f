#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "secgraph/rng.hpp"

namespace secgraph {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Boundary { plain, torus, inflated };

/// Square observation window [0, L]^2. An inflated window extends the
/// sampling region to [-m, L + m]^2 while keeping [0, L]^2 as its core.
class Window {
 public:
  static Window plain(double side);
  static Window torus(double side);
  static Window inflated(double side, double margin);

  double side() const noexcept { return side_; }
  double margin() const noexcept { return margin_; }
  Boundary boundary() const noexcept { return boundary_; }
  bool is_torus() const noexcept { return boundary_ == Boundary::torus; }

  /// Bounds of the sampling region along either axis.
  double lo() const noexcept { return -margin_; }
  double hi() const noexcept { return side_ + margin_; }
  double extent() const noexcept { return side_ + 2.0 * margin_; }
  double area() const noexcept { return extent() * extent(); }
  Point center() const noexcept { return {0.5 * side_, 0.5 * side_}; }

  bool contains(Point p) const noexcept;
  bool in_core(Point p) const noexcept;

  /// Euclidean distance; minimum-image distance on the torus.
  double distance(Point a, Point b) const noexcept;

  /// Distance from p to the edge of the sampling region (+inf on the torus).
  double distance_to_edge(Point p) const noexcept;

  /// Plain window over the core square.
  Window core() const { return plain(side_); }

  /// Same core and boundary family (torus vs. Euclidean).
  bool compatible_with(const Window& other) const noexcept;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Window(double side, Boundary boundary, double margin)
      : side_(side), margin_(margin), boundary_(boundary) {}

  double side_;
  double margin_;
  Boundary boundary_;
};

/// A sampled point configuration. Points are kept sorted by (x, y) so that
/// node indices are reproducible.
struct PointSet {
  std::vector<Point> points;
  double intensity = 0.0;
  Window window = Window::plain(1.0);
  SeedSpec seed{};
  std::optional<std::size_t> origin;  ///< index of the node added by add_center_node

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
  const Point& operator[](std::size_t i) const { return points[i]; }
};

/// Homogeneous Poisson process of the given intensity over the window's
/// sampling region.
PointSet sample_ppp(double intensity, const Window& window, const SeedSpec& seed,
                    Stream stream = Stream::goods);

/// Returns ps plus a node at the window center, flagged as the origin.
PointSet add_center_node(PointSet ps);

double pairwise_distance(Point p, Point q, const Window& window);

/// Distance from each good node to its nearest eavesdropper (+inf when there
/// are none). Uses a uniform grid index.
std::vector<double> guard_radii(const PointSet& goods, const PointSet& eaves,
                                const Window& window);

/// Reference O(n*m) scan; same floating-point operations as the indexed path.
std::vector<double> guard_radii_bruteforce(const PointSet& goods, const PointSet& eaves,
                                           const Window& window);

/// Keeps the points whose mark is below keep; marks[i] pairs with points[i].
PointSet thin(const PointSet& ps, std::span<const double> marks, double keep);

/// Uniform marks, one per point, drawn from the marks stream of ps.seed.
std::vector<double> draw_marks(const PointSet& ps);

/// Sampling margin for unbiased degree statistics:
/// max(r, min(5/sqrt(lambda), L/2)), or r alone when lambda == 0.
double degree_margin(double lambda, double r, double side);

/// Grid cell size max(r, lambda^{-1/2}) clamped to [L/1024, L]; infinite r
/// and zero lambda drop out of the max.
double default_cell_size(double lambda, double r, double side);

/// CSV with header "x,y" and 17 significant digits.
void write_points_csv(std::ostream& os, const PointSet& ps);

}  // namespace secgraph
