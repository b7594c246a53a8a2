#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hjc {

struct HalfLinePoint {
  double x = 0.0;
  friend auto operator<=>(const HalfLinePoint&, const HalfLinePoint&) = default;
};

/// [0, infinity) with |x - y|. Samples on h * N, window [0, hi].
class HalfLine {
 public:
  using Point = HalfLinePoint;

  HalfLine(double h, double hi);

  double resolution() const { return h_; }
  double eps_mid() const { return 1e-9; }
  double upper() const { return hi_; }
  std::string name() const { return "halfline"; }

  Point make(double x) const;
  double distance(const Point& a, const Point& b) const;
  std::size_t branch_count(const Point&, const Point&) const { return 1; }
  Point point_at_distance(const Point& a, const Point& b, double ell, std::size_t branch) const;
  std::vector<Point> midpoints(const Point& a, const Point& b) const;
  std::vector<Point> ball_sample(const Point& center, double r) const;
  std::vector<Point> sample_points() const;

 private:
  double h_;
  double hi_;
};

}  // namespace hjc
