#include "fluidnet/torus.hpp"

#include <limits>

#include "fluidnet/error.hpp"

namespace fluidnet {

TorusRegion::TorusRegion(double width, double height, double skew)
    : width_(width), height_(height), skew_(skew) {
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height) ||
      !std::isfinite(skew)) {
    throw Error(ErrorKind::kDomainError, "torus width and height must be positive and finite");
  }
}

Point TorusRegion::wrap(Point p) const {
  const double ny = std::floor(p.y / height_);
  p.y -= ny * height_;
  p.x -= ny * skew_;
  p.x -= std::floor(p.x / width_) * width_;
  // floor() can leave x == width after rounding.
  if (p.x >= width_) p.x = 0.0;
  if (p.y >= height_) p.y = 0.0;
  return p;
}

Displacement TorusRegion::displacement(Point p, Point q) const {
  double dy = q.y - p.y;
  double dx = q.x - p.x;
  const double ny = std::round(dy / height_);
  dy -= ny * height_;
  dx -= ny * skew_;
  dx -= std::round(dx / width_) * width_;
  if (skew_ == 0.0) return {dx, dy};

  Displacement best{dx, dy};
  double best_sq = dx * dx + dy * dy;
  for (int j = -1; j <= 1; ++j) {
    for (int i = -1; i <= 1; ++i) {
      const double cx = dx + i * width_ + j * skew_;
      const double cy = dy + j * height_;
      const double sq = cx * cx + cy * cy;
      if (sq < best_sq) {
        best_sq = sq;
        best = {cx, cy};
      }
    }
  }
  return best;
}

}  // namespace fluidnet
