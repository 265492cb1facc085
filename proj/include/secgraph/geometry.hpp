#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "secgraph/rng.hpp"

namespace secgraph {

using NodeId = std::int32_t;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double dist2(Point a, Point b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Axis-aligned rectangle with positive area.
struct Window {
  Point lo;
  Point hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double area() const { return width() * height(); }
  bool contains(Point p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  Window inflated(double pad) const {
    return {{lo.x - pad, lo.y - pad}, {hi.x + pad, hi.y + pad}};
  }
  static Window centered(double half_width) {
    return {{-half_width, -half_width}, {half_width, half_width}};
  }
  bool valid() const;
};

// Distance from p to the nearest edge of the window (0 outside).
double boundary_distance(const Window& w, Point p);

// Homogeneous Poisson process restricted to a window: the count is
// Poisson(lambda * area) and positions are i.i.d. uniform. Pure function
// of (lambda, window, stream state). Throws std::invalid_argument for
// lambda < 0 or an invalid window.
std::vector<Point> sample_poisson(double lambda, const Window& window,
                                  Rng& rng);

// Uniform-grid index over a fixed window. Immutable after construction
// and safe to share across concurrent readers. Queries return exactly
// what a linear scan over the stored points would return; the hot loops
// run through the runtime-dispatched distance kernels.
class SpatialIndex {
 public:
  // cell_size <= 0 picks one cell spanning the window. The size is
  // clamped so the grid stays between 1 and 4096 cells per axis.
  SpatialIndex(std::span<const Point> points, const Window& bounds,
               double cell_size);

  std::size_t size() const { return xs_.size(); }
  bool empty() const { return xs_.empty(); }

  // Distance to the nearest stored point; +infinity when empty.
  double nearest_distance(Point p) const;

  // Appends the ids of stored points strictly within distance r of p.
  // Ids refer to positions in the span the index was built from; the
  // output is ascending. r may be +infinity.
  void collect_within(Point p, double r, std::vector<NodeId>& out) const;

  static double default_cell_size(double lambda_l, double lambda_e,
                                  const Window& w);

 private:
  int cell_of_x(double x) const;
  int cell_of_y(double y) const;

  Window bounds_;
  double cell_ = 1.0;
  int nx_ = 1;
  int ny_ = 1;
  std::vector<std::int32_t> cell_start_;  // CSR offsets, nx*ny + 1
  std::vector<double> xs_, ys_;           // points grouped by cell
  std::vector<NodeId> ids_;               // original ids, grouped by cell
};

}  // namespace secgraph
