#include "hjconvex/spaces/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hjconvex/error.hpp"
#include "hjconvex/space.hpp"

namespace hjc {
namespace {
constexpr double kSnap = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

MetricTree::MetricTree(int vertex_count, std::vector<TreeEdge> edges, double h,
                       std::optional<std::pair<int, double>> sample_window, std::string label)
    : n_(vertex_count), edges_(std::move(edges)), h_(h), window_(sample_window),
      label_(std::move(label)) {
  if (n_ < 2) throw DomainError("a tree needs at least two vertices");
  if (static_cast<int>(edges_.size()) != n_ - 1) throw DomainError("a tree on n vertices has n-1 edges");
  if (!(h > 0.0)) throw DomainError("resolution h must be positive");
  std::vector<std::vector<int>> adj(n_);
  min_edge_.assign(n_, -1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto& E = edges_[e];
    if (E.u < 0 || E.u >= n_ || E.v < 0 || E.v >= n_ || E.u == E.v)
      throw DomainError("tree edge has invalid endpoints");
    if (!(E.length > 0.0)) throw DomainError("tree edge lengths must be positive");
    adj[E.u].push_back(e);
    adj[E.v].push_back(e);
    for (int w : {E.u, E.v})
      if (min_edge_[w] < 0) min_edge_[w] = e;
  }
  vdist_.assign(static_cast<std::size_t>(n_) * n_, kInf);
  next_edge_.assign(static_cast<std::size_t>(n_) * n_, -1);
  // Depth-first search from every vertex; for each target record the edge
  // taken first from the root.
  for (int root = 0; root < n_; ++root) {
    std::vector<int> stack{root};
    std::vector<int> first(n_, -1);
    vdist_[root * n_ + root] = 0.0;
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      for (int e : adj[w]) {
        const int o = edges_[e].u == w ? edges_[e].v : edges_[e].u;
        if (vdist_[root * n_ + o] != kInf) continue;
        vdist_[root * n_ + o] = vdist_[root * n_ + w] + edges_[e].length;
        first[o] = (w == root) ? e : first[w];
        stack.push_back(o);
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (vdist_[root * n_ + v] == kInf) throw DomainError("tree is not connected");
      next_edge_[root * n_ + v] = first[v];
    }
  }
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const double L = edges_[e].length;
    const auto cells = static_cast<long long>(std::floor(L / h_ + 1e-9));
    for (long long k = 0; k <= cells; ++k) all_samples_.push_back(canonical(e, k * h_));
    all_samples_.push_back(canonical(e, L));
  }
  sort_unique(all_samples_);
}

MetricTree MetricTree::star(int arms, double arm_length, double h) {
  std::vector<TreeEdge> edges;
  for (int i = 0; i < arms; ++i) edges.push_back({0, i + 1, arm_length});
  return MetricTree(arms + 1, edges, h, std::nullopt, "star" + std::to_string(arms));
}

MetricTree MetricTree::cross(double arm, double h, double sample_radius) {
  return MetricTree(4, {{0, 1, arm}, {0, 2, arm}, {0, 3, arm}}, h,
                    std::make_pair(0, sample_radius), "cross");
}

MetricTree::Point MetricTree::canonical(int edge, double offset) const {
  const auto& E = edges_[edge];
  int v = -1;
  if (offset <= kSnap) v = E.u;
  else if (offset >= E.length - kSnap) v = E.v;
  if (v < 0) return Point{edge, offset};
  const int ce = min_edge_[v];
  return Point{ce, edges_[ce].u == v ? 0.0 : edges_[ce].length};
}

void MetricTree::check(const Point& p) const {
  if (p.edge < 0 || p.edge >= static_cast<int>(edges_.size()))
    throw DomainError("tree point references a missing edge");
  if (p.offset < -kSnap || p.offset > edges_[p.edge].length + kSnap)
    throw DomainError("tree point offset outside its edge");
}

MetricTree::Point MetricTree::vertex(int v) const {
  if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
  const int ce = min_edge_[v];
  return Point{ce, edges_[ce].u == v ? 0.0 : edges_[ce].length};
}

MetricTree::Point MetricTree::make(int edge, double offset) const {
  Point p{edge, offset};
  check(p);
  return canonical(edge, std::clamp(offset, 0.0, edges_[edge].length));
}

std::optional<int> MetricTree::as_vertex(const Point& p) const {
  const auto& E = edges_[p.edge];
  if (p.offset <= kSnap) return E.u;
  if (p.offset >= E.length - kSnap) return E.v;
  return std::nullopt;
}

MetricTree::Route MetricTree::route(const Point& a, const Point& b) const {
  check(a);
  check(b);
  if (a.edge == b.edge) return Route{std::abs(a.offset - b.offset)};
  struct Port {
    int v;
    double cost;
  };
  auto ports = [&](const Point& p, Port out[2]) {
    const auto& E = edges_[p.edge];
    if (auto v = as_vertex(p)) {
      out[0] = {*v, 0.0};
      return 1;
    }
    out[0] = {E.u, p.offset};
    out[1] = {E.v, E.length - p.offset};
    return 2;
  };
  Port pa[2], pb[2];
  const int na = ports(a, pa), nb = ports(b, pb);
  Route best{kInf};
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      const double d = pa[i].cost + vdist_[pa[i].v * n_ + pb[j].v] + pb[j].cost;
      if (d < best.length) best = Route{d, pa[i].v, pb[j].v};
    }
  return best;
}

double MetricTree::distance(const Point& a, const Point& b) const { return route(a, b).length; }

MetricTree::Point MetricTree::point_at_distance(const Point& a, const Point& b, double ell,
                                                std::size_t branch) const {
  if (branch != 0) throw EnumerationError("branch index out of range");
  const Route r = route(a, b);
  if (ell < 0.0 || ell > r.length * (1.0 + 1e-12) + 1e-15)
    throw DomainError("arc length outside [0, d(x,y)]");
  if (ell >= r.length) return b;
  if (r.from_vertex < 0) {
    const double dir = b.offset >= a.offset ? 1.0 : -1.0;
    return canonical(a.edge, a.offset + dir * ell);
  }
  // Leg 1: from a to its exit vertex along a's edge.
  const auto& Ea = edges_[a.edge];
  const double leg1 = as_vertex(a) ? 0.0
                      : (r.from_vertex == Ea.u ? a.offset : Ea.length - a.offset);
  if (ell <= leg1) {
    const double off = r.from_vertex == Ea.u ? a.offset - ell : a.offset + ell;
    return canonical(a.edge, off);
  }
  double left = ell - leg1;
  int w = r.from_vertex;
  while (w != r.to_vertex) {
    const int e = next_edge_[w * n_ + r.to_vertex];
    const auto& E = edges_[e];
    if (left <= E.length) return canonical(e, E.u == w ? left : E.length - left);
    left -= E.length;
    w = E.u == w ? E.v : E.u;
  }
  // Last leg: from the entry vertex toward b along b's edge.
  const auto& Eb = edges_[b.edge];
  const double off = Eb.u == w ? left : Eb.length - left;
  return canonical(b.edge, off);
}

std::vector<MetricTree::Point> MetricTree::midpoints(const Point& a, const Point& b) const {
  return {point_at_distance(a, b, 0.5 * distance(a, b), 0)};
}

std::vector<MetricTree::Point> MetricTree::ball_sample(const Point& center, double r) const {
  if (r < 0.0) throw DomainError("negative ball radius");
  std::vector<Point> out;
  const double tol = 1e-12 * std::max(1.0, r);
  for (const auto& p : all_samples_)
    if (distance(center, p) <= r + tol) out.push_back(p);
  insert_sorted(out, center);
  return out;
}

std::vector<MetricTree::Point> MetricTree::sample_points() const {
  if (!window_) return all_samples_;
  const Point c = vertex(window_->first);
  std::vector<Point> out;
  for (const auto& p : all_samples_)
    if (distance(c, p) <= window_->second + 1e-12) out.push_back(p);
  return out;
}

std::pair<double, double> MetricTree::cross_coordinates(const Point& p) const {
  if (label_ != "cross") throw DomainError("planar coordinates exist only for the cross space");
  if (as_vertex(p) && *as_vertex(p) == 0) return {0.0, 0.0};
  const double s = p.offset;
  switch (p.edge) {
    case 0: return {0.0, s};
    case 1: return {0.0, -s};
    default: return {s, 0.0};
  }
}

}  // namespace hjc
