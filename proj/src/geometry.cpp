#include "secgraph/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "secgraph/kernels.hpp"

namespace secgraph {

namespace {
// Batch size handed to the collect kernel at a time.
constexpr int kCollectChunk = 256;
}  // namespace

bool Window::valid() const {
  return std::isfinite(lo.x) && std::isfinite(lo.y) && std::isfinite(hi.x) &&
         std::isfinite(hi.y) && hi.x > lo.x && hi.y > lo.y;
}

double boundary_distance(const Window& w, Point p) {
  if (!w.contains(p)) return 0.0;
  double dx = std::min(p.x - w.lo.x, w.hi.x - p.x);
  double dy = std::min(p.y - w.lo.y, w.hi.y - p.y);
  return std::min(dx, dy);
}

std::vector<Point> sample_poisson(double lambda, const Window& window,
                                  Rng& rng) {
  if (!(lambda >= 0.0))
    throw std::invalid_argument("point process density must be >= 0");
  if (!window.valid()) throw std::invalid_argument("invalid sampling window");
  std::int64_t count = rng.poisson(lambda * window.area());
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    double x = rng.uniform(window.lo.x, window.hi.x);
    double y = rng.uniform(window.lo.y, window.hi.y);
    points.push_back({x, y});
  }
  return points;
}

double SpatialIndex::default_cell_size(double lambda_l, double lambda_e,
                                       const Window& w) {
  double lambda = std::max(lambda_l, lambda_e);
  double cell = lambda > 0.0 ? 1.0 / std::sqrt(lambda) : kInf;
  return std::min(cell, std::min(w.width(), w.height()));
}

SpatialIndex::SpatialIndex(std::span<const Point> points, const Window& bounds,
                           double cell_size)
    : bounds_(bounds) {
  if (!bounds.valid()) throw std::invalid_argument("invalid index window");
  double min_dim = std::min(bounds.width(), bounds.height());
  if (!(cell_size > 0.0)) cell_size = min_dim;
  cell_ = std::clamp(cell_size, min_dim / 4096.0, min_dim);
  nx_ = std::max(1, static_cast<int>(std::ceil(bounds.width() / cell_)));
  ny_ = std::max(1, static_cast<int>(std::ceil(bounds.height() / cell_)));

  std::size_t n = points.size();
  std::vector<std::int32_t> cell_of(n);
  cell_start_.assign(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int cx = cell_of_x(points[i].x);
    int cy = cell_of_y(points[i].y);
    cell_of[i] = cy * nx_ + cx;
    ++cell_start_[cell_of[i] + 1];
  }
  for (std::size_t c = 1; c < cell_start_.size(); ++c)
    cell_start_[c] += cell_start_[c - 1];

  xs_.resize(n);
  ys_.resize(n);
  ids_.resize(n);
  std::vector<std::int32_t> cursor(cell_start_.begin(), cell_start_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::int32_t slot = cursor[cell_of[i]]++;
    xs_[slot] = points[i].x;
    ys_[slot] = points[i].y;
    ids_[slot] = static_cast<NodeId>(i);
  }
}

int SpatialIndex::cell_of_x(double x) const {
  double c = (x - bounds_.lo.x) / cell_;
  if (!(c > 0.0)) return 0;
  if (c >= nx_) return nx_ - 1;
  return static_cast<int>(c);
}

int SpatialIndex::cell_of_y(double y) const {
  double c = (y - bounds_.lo.y) / cell_;
  if (!(c > 0.0)) return 0;
  if (c >= ny_) return ny_ - 1;
  return static_cast<int>(c);
}

double SpatialIndex::nearest_distance(Point p) const {
  if (empty()) return kInf;
  const auto& ops = kernels::active();
  int cx = cell_of_x(p.x);
  int cy = cell_of_y(p.y);
  int max_ring =
      std::max(std::max(cx, nx_ - 1 - cx), std::max(cy, ny_ - 1 - cy));
  double best = kInf;
  auto scan_cell = [&](int x, int y) {
    std::int32_t c = y * nx_ + x;
    std::int32_t begin = cell_start_[c];
    std::int32_t len = cell_start_[c + 1] - begin;
    if (len == 0) return;
    double d2 =
        ops.min_dist2(p.x, p.y, xs_.data() + begin, ys_.data() + begin, len);
    if (d2 < best) best = d2;
  };
  for (int ring = 0; ring <= max_ring; ++ring) {
    // Any point in a cell at Chebyshev ring k is at least (k-1) cells away.
    double reachable = ring > 0 ? (ring - 1) * cell_ : 0.0;
    if (best < kInf && reachable * reachable >= best) break;
    int x0 = std::max(0, cx - ring), x1 = std::min(nx_ - 1, cx + ring);
    int y0 = std::max(0, cy - ring), y1 = std::min(ny_ - 1, cy + ring);
    for (int y = y0; y <= y1; ++y) {
      if (y == cy - ring || y == cy + ring) {
        for (int x = x0; x <= x1; ++x) scan_cell(x, y);
      } else {
        if (cx - ring >= 0) scan_cell(cx - ring, y);
        if (cx + ring < nx_) scan_cell(cx + ring, y);
      }
    }
  }
  return std::sqrt(best);
}

void SpatialIndex::collect_within(Point p, double r,
                                  std::vector<NodeId>& out) const {
  if (empty() || !(r > 0.0)) return;
  const auto& ops = kernels::active();
  double r2 = r * r;
  int x0 = cell_of_x(p.x - r), x1 = cell_of_x(p.x + r);
  int y0 = cell_of_y(p.y - r), y1 = cell_of_y(p.y + r);
  std::int32_t hits[kCollectChunk];
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      std::int32_t c = y * nx_ + x;
      std::int32_t begin = cell_start_[c];
      std::int32_t end = cell_start_[c + 1];
      for (std::int32_t chunk = begin; chunk < end; chunk += kCollectChunk) {
        int len = std::min<std::int32_t>(kCollectChunk, end - chunk);
        int found = ops.collect_within(p.x, p.y, r2, xs_.data() + chunk,
                                       ys_.data() + chunk, len, hits);
        for (int k = 0; k < found; ++k) out.push_back(ids_[chunk + hits[k]]);
      }
    }
  }
}

}  // namespace secgraph
