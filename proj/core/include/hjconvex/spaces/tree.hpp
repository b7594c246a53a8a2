#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hjc {

/// A point on edge `edge` at arc length `offset` from the edge's first
/// vertex. Vertices have one canonical representative: the incident edge
/// with the smallest id.
struct TreePoint {
  int edge = 0;
  double offset = 0.0;
  friend auto operator<=>(const TreePoint&, const TreePoint&) = default;
};

struct TreeEdge {
  int u = 0;
  int v = 0;
  double length = 1.0;
};

/// A finite metric tree (a geodesic space whose geodesics are unique).
///
/// Vertex-to-vertex distances and next hops are tabulated on construction;
/// a geodesic is the concatenation of partial edges at both ends with the
/// unique vertex path between them.
class MetricTree {
 public:
  using Point = TreePoint;

  MetricTree(int vertex_count, std::vector<TreeEdge> edges, double h,
             std::optional<std::pair<int, double>> sample_window = std::nullopt,
             std::string label = "tree");

  /// Star with `arms` edges of length `arm_length` around vertex 0.
  static MetricTree star(int arms, double arm_length, double h);
  /// {0} x R u R+ x {0}, truncated to rays of length `arm`, sampled within
  /// `sample_radius` of the origin; edges 0, 1, 2 point up, down and right.
  static MetricTree cross(double arm, double h, double sample_radius);

  double resolution() const { return h_; }
  double eps_mid() const { return 1e-9; }
  std::string name() const { return label_; }
  int vertex_count() const { return n_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }

  Point vertex(int v) const;
  Point make(int edge, double offset) const;
  /// Vertex index if p is a vertex.
  std::optional<int> as_vertex(const Point& p) const;

  double distance(const Point& a, const Point& b) const;
  std::size_t branch_count(const Point&, const Point&) const { return 1; }
  Point point_at_distance(const Point& a, const Point& b, double ell, std::size_t branch) const;
  std::vector<Point> midpoints(const Point& a, const Point& b) const;
  std::vector<Point> ball_sample(const Point& center, double r) const;
  std::vector<Point> sample_points() const;

  /// Planar coordinates for the cross space (edges 0, 1, 2 = up, down, right).
  std::pair<double, double> cross_coordinates(const Point& p) const;

 private:
  struct Route {
    double length;
    int from_vertex = -1;  // -1: a and b share an edge, direct segment
    int to_vertex = -1;
  };
  Route route(const Point& a, const Point& b) const;
  Point canonical(int edge, double offset) const;
  void check(const Point& p) const;

  int n_;
  std::vector<TreeEdge> edges_;
  double h_;
  std::optional<std::pair<int, double>> window_;
  std::string label_;
  std::vector<double> vdist_;  // n x n
  std::vector<int> next_edge_;  // edge leaving u toward v
  std::vector<int> min_edge_;   // smallest incident edge per vertex
  std::vector<Point> all_samples_;
};

}  // namespace hjc
