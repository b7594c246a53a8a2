#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace hjc {

struct EuclideanPoint {
  static constexpr std::size_t kMaxDim = 4;
  std::array<double, kMaxDim> c{};
  std::uint8_t dim = 1;

  EuclideanPoint() = default;
  explicit EuclideanPoint(std::initializer_list<double> coords);

  double operator[](std::size_t i) const { return c[i]; }
  double& operator[](std::size_t i) { return c[i]; }
  friend auto operator<=>(const EuclideanPoint&, const EuclideanPoint&) = default;
};

/// R^dim with the l^p norm, 1 < p <= infinity.
///
/// Samples live on the global grid h * Z^dim. For p < infinity geodesics
/// are unique straight segments. For p = infinity the midpoint set is a box
/// and is returned sampled at resolution h (the straight midpoint first is
/// not guaranteed; all entries are sorted).
class EuclideanSpace {
 public:
  using Point = EuclideanPoint;
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  EuclideanSpace(int dim, double p, double h, double lo = -1.0, double hi = 1.0);

  int dim() const { return dim_; }
  double p() const { return p_; }
  double resolution() const { return h_; }
  double eps_mid() const { return 1e-9; }
  std::string name() const;

  Point make(std::initializer_list<double> coords) const;
  double norm(const Point& v) const;
  double distance(const Point& x, const Point& y) const;
  std::size_t branch_count(const Point& x, const Point& y) const;
  Point point_at_distance(const Point& x, const Point& y, double ell, std::size_t branch) const;
  std::vector<Point> midpoints(const Point& x, const Point& y) const;
  std::vector<Point> ball_sample(const Point& center, double r) const;
  std::vector<Point> sample_points() const;

 private:
  void check(const Point& x) const;
  std::vector<Point> sup_norm_midpoints(const Point& x, const Point& y) const;

  int dim_;
  double p_;
  double h_;
  double lo_, hi_;
};

}  // namespace hjc
