#include "secgraph/spatial_grid.hpp"

#include "secgraph/error.hpp"

namespace secgraph {

GridIndex::GridIndex(std::span<const Point> points, const Window& window, double cell_size)
    : points_(points), window_(window) {
  detail::require(cell_size > 0.0 && std::isfinite(cell_size), "grid cell size must be > 0");
  const double ext = window.extent();
  cells_ = static_cast<int>(std::clamp(std::floor(ext / cell_size), 1.0, 1024.0));
  cell_ = ext / cells_;

  const auto ncells = static_cast<std::size_t>(cells_) * cells_;
  std::vector<std::uint32_t> cell_id(points.size());
  start_.assign(ncells + 1, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [cx, cy] = cell_of(points[i]);
    cell_id[i] = static_cast<std::uint32_t>(cy * cells_ + cx);
    ++start_[cell_id[i] + 1];
  }
  for (std::size_t c = 0; c < ncells; ++c) start_[c + 1] += start_[c];
  order_.resize(points.size());
  std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
  for (std::size_t i = 0; i < points.size(); ++i)
    order_[fill[cell_id[i]]++] = static_cast<std::uint32_t>(i);
}

std::pair<int, int> GridIndex::cell_of(Point p) const noexcept {
  const auto to_cell = [this](double v) {
    const int c = static_cast<int>(std::floor((v - window_.lo()) / cell_));
    return std::clamp(c, 0, cells_ - 1);
  };
  return {to_cell(p.x), to_cell(p.y)};
}

int GridIndex::wrap(int g) const noexcept {
  if (window_.is_torus()) return ((g % cells_) + cells_) % cells_;
  return (g < 0 || g >= cells_) ? -1 : g;
}

double GridIndex::nearest_distance(Point q) const {
  double best = std::numeric_limits<double>::infinity();
  if (points_.empty()) return best;
  const auto [cx, cy] = cell_of(q);
  const auto scan = [&](int gx, int gy) {
    const int wx = wrap(gx), wy = wrap(gy);
    if (wx < 0 || wy < 0) return;
    const auto c = static_cast<std::size_t>(wy) * cells_ + wx;
    for (auto k = start_[c]; k < start_[c + 1]; ++k)
      best = std::min(best, window_.distance(q, points_[order_[k]]));
  };
  for (int ring = 0; ring <= cells_; ++ring) {
    if (ring == 0) {
      scan(cx, cy);
    } else {
      for (int d = -ring; d <= ring; ++d) {
        scan(cx + d, cy - ring);
        scan(cx + d, cy + ring);
      }
      for (int d = -ring + 1; d <= ring - 1; ++d) {
        scan(cx - ring, cy + d);
        scan(cx + ring, cy + d);
      }
    }
    // Anything in ring + 1 or beyond is at least ring cell widths away.
    if (best <= ring * cell_) break;
    if (window_.is_torus() && 2 * ring + 1 >= cells_) break;
  }
  return best;
}

}  // namespace secgraph
