#pragma once

#include <cmath>

namespace fluidnet {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Displacement {
  double dx = 0.0;
  double dy = 0.0;

  double norm() const { return std::hypot(dx, dy); }
};

/// Periodic 2-D region with period vectors (width, 0) and (skew, height).
///
/// skew = 0 is the ordinary rectangular torus. A non-zero skew lets a
/// hexagonal lattice patch wrap on its own 60-degree supercell. Wrapped
/// points always lie in [0, width) x [0, height), which is a fundamental
/// domain for either case.
class TorusRegion {
 public:
  TorusRegion(double width, double height, double skew = 0.0);

  double width() const { return width_; }
  double height() const { return height_; }
  double skew() const { return skew_; }
  double area() const { return width_ * height_; }

  Point wrap(Point p) const;

  /// Shortest periodic image of q - p.
  Displacement displacement(Point p, Point q) const;

  double distance(Point p, Point q) const { return displacement(p, q).norm(); }

 private:
  double width_;
  double height_;
  double skew_;
};

/// Minimum over the periodic images of the Euclidean distance.
inline double torus_distance(const TorusRegion& region, Point p, Point q) {
  return region.distance(p, q);
}

}  // namespace fluidnet
