#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "secgraph/point_process.hpp"

namespace secgraph {

/// Bucket grid over a window's sampling region. Points are referenced by
/// index into the span given at construction, which must outlive the grid.
class GridIndex {
 public:
  GridIndex(std::span<const Point> points, const Window& window, double cell_size);

  /// Distance to the nearest indexed point; +inf if the index is empty.
  double nearest_distance(Point q) const;

  /// Calls fn(index, distance) for every indexed point with distance <= radius.
  /// Each point is visited at most once, also on the torus.
  template <class Fn>
  void for_each_within(Point q, double radius, Fn&& fn) const {
    if (points_.empty()) return;
    const int reach = std::isfinite(radius)
                          ? static_cast<int>(std::min<double>(std::ceil(radius / cell_), cells_))
                          : cells_;
    const auto [cx, cy] = cell_of(q);
    const bool all = 2 * reach + 1 >= cells_;
    const int x0 = all ? 0 : cx - reach, x1 = all ? cells_ - 1 : cx + reach;
    const int y0 = all ? 0 : cy - reach, y1 = all ? cells_ - 1 : cy + reach;
    for (int gy = y0; gy <= y1; ++gy) {
      const int wy = wrap(gy);
      if (wy < 0) continue;
      for (int gx = x0; gx <= x1; ++gx) {
        const int wx = wrap(gx);
        if (wx < 0) continue;
        const auto c = static_cast<std::size_t>(wy) * cells_ + wx;
        for (auto k = start_[c]; k < start_[c + 1]; ++k) {
          const auto idx = order_[k];
          const double d = window_.distance(q, points_[idx]);
          if (d <= radius) fn(idx, d);
        }
      }
    }
  }

  int cells_per_side() const noexcept { return cells_; }
  double cell_size() const noexcept { return cell_; }

 private:
  std::pair<int, int> cell_of(Point p) const noexcept;
  int wrap(int g) const noexcept;  // -1 when outside a non-periodic grid

  std::span<const Point> points_;
  Window window_;
  double cell_;
  int cells_;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> order_;
};

}  // namespace secgraph
