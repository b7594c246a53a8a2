#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hjc {

/// A point of S^1 x R; theta is kept in [0, 2*pi).
struct CylinderPoint {
  double theta = 0.0;
  double height = 0.0;
  friend auto operator<=>(const CylinderPoint&, const CylinderPoint&) = default;
};

/// The flat cylinder S^1 x R with
///   d(x, y) = min_n sqrt((dtheta + 2 pi n)^2 + dheight^2).
///
/// Geodesic branches are the minimizing windings n, ordered by |n| and then
/// by n, so branch 0 is the unwrapped segment whenever it is minimal. The
/// angular grid has N = round(2 pi / h) cells so that it closes up.
class Cylinder {
 public:
  using Point = CylinderPoint;

  Cylinder(double h, double height_lo, double height_hi);

  double resolution() const { return h_; }
  double angular_step() const { return dtheta_; }
  int angular_cells() const { return cells_; }
  double eps_mid() const { return 1e-9; }
  std::string name() const { return "cylinder"; }

  static double normalize_angle(double theta);
  Point make(double theta, double height) const { return Point{normalize_angle(theta), height}; }
  Point grid_point(long long i, long long k) const;

  double distance(const Point& a, const Point& b) const;
  /// Minimizing winding numbers in branch order.
  std::vector<int> windings(const Point& a, const Point& b) const;
  std::size_t branch_count(const Point& a, const Point& b) const { return windings(a, b).size(); }
  Point point_at_distance(const Point& a, const Point& b, double ell, std::size_t branch) const;
  std::vector<Point> midpoints(const Point& a, const Point& b) const;
  std::vector<Point> ball_sample(const Point& center, double r) const;
  std::vector<Point> sample_points() const;

 private:
  double h_;
  double lo_, hi_;
  int cells_;
  double dtheta_;
};

}  // namespace hjc
