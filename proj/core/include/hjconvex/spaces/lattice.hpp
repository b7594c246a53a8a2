#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hjconvex/dyadic.hpp"

namespace hjc {

struct LatticePoint {
  Dyadic x1;
  Dyadic x2;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// The grid graph L^2 = (Z x R) u (R x Z) with its intrinsic path metric.
///
/// The path metric equals the l^1 distance except for two points on
/// parallel unit edges of the same cell column (or row), where the path has
/// to leave through an endpoint. Everything is exact in dyadic arithmetic.
/// Samples lie on the graph with coordinates in h Z, h = 2^-m.
class Lattice2 {
 public:
  using Point = LatticePoint;

  struct Box {
    std::int64_t x1_lo = -2, x1_hi = 2, x2_lo = -2, x2_hi = 2;
  };

  Lattice2(int m, Box box, std::optional<std::int64_t> l1_radius = std::nullopt);

  int level() const { return m_; }
  Dyadic step() const { return Dyadic::fraction(1, m_); }
  double resolution() const { return step().to_double(); }
  double eps_mid() const { return 0.0; }
  const Box& box() const { return box_; }
  std::string name() const { return "lattice"; }

  static bool on_graph(const Point& p) { return p.x1.is_integer() || p.x2.is_integer(); }
  Point make(Dyadic x1, Dyadic x2) const;

  Dyadic exact_distance(const Point& a, const Point& b) const;
  double distance(const Point& a, const Point& b) const { return exact_distance(a, b).to_double(); }

  /// All z with d(a, z) = ell and d(z, b) = d(a, b) - ell, sorted.
  std::vector<Point> points_at(const Point& a, const Point& b, const Dyadic& ell) const;
  std::size_t branch_count(const Point& a, const Point& b) const;
  /// Branch k is the k-th point of points_at in lexicographic order; branch 0
  /// therefore traces the staircase that keeps x1 as small as possible.
  Point point_at_distance(const Point& a, const Point& b, double ell, std::size_t branch) const;
  std::vector<Point> midpoints(const Point& a, const Point& b) const;
  std::vector<Point> ball_sample(const Point& center, double r) const;
  std::vector<Point> sample_points() const;

 private:
  int m_;
  Box box_;
  std::optional<std::int64_t> l1_radius_;
};

}  // namespace hjc
