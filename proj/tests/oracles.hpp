#pragma once

// Reference implementations that share no code with the library. They are
// slow and only meant for small inputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <queue>
#include <utility>
#include <vector>

namespace oracle {

/// Grid graph subdivided at step 2^-m, coordinates stored as integers
/// scaled by 2^m. Nodes are the points with at least one integer coordinate.
class SubdividedLattice {
 public:
  SubdividedLattice(int m, std::int64_t lo1, std::int64_t hi1, std::int64_t lo2, std::int64_t hi2)
      : s_(std::int64_t{1} << m), lo1_(lo1 * s_), hi1_(hi1 * s_), lo2_(lo2 * s_), hi2_(hi2 * s_) {
    for (std::int64_t a = lo1_; a <= hi1_; ++a)
      for (std::int64_t b = lo2_; b <= hi2_; ++b)
        if (a % s_ == 0 || b % s_ == 0) index_[{a, b}] = nodes_.size(), nodes_.push_back({a, b});
  }

  std::int64_t scale() const { return s_; }
  const std::vector<std::pair<std::int64_t, std::int64_t>>& nodes() const { return nodes_; }

  /// Graph distances (in units of 2^-m) from the node (a, b).
  std::vector<std::int64_t> distances_from(std::int64_t a, std::int64_t b) const {
    std::vector<std::int64_t> d(nodes_.size(), std::numeric_limits<std::int64_t>::max());
    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> q;
    const std::size_t src = index_.at({a, b});
    d[src] = 0;
    q.push({0, src});
    while (!q.empty()) {
      const auto [dist, i] = q.top();
      q.pop();
      if (dist != d[i]) continue;
      const auto [x, y] = nodes_[i];
      const std::pair<std::int64_t, std::int64_t> nb[4] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
      for (const auto& n : nb) {
        // Moving along x needs an integer x2, and vice versa.
        if (n.second == y && y % s_ != 0) continue;
        if (n.first == x && x % s_ != 0) continue;
        auto it = index_.find(n);
        if (it == index_.end()) continue;
        if (dist + 1 < d[it->second]) {
          d[it->second] = dist + 1;
          q.push({dist + 1, it->second});
        }
      }
    }
    return d;
  }

 private:
  std::int64_t s_, lo1_, hi1_, lo2_, hi2_;
  std::vector<std::pair<std::int64_t, std::int64_t>> nodes_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> index_;
};

/// Flat cylinder distance by scanning unwrapped copies.
inline double cylinder_distance(double t1, double h1, double t2, double h2) {
  double best = std::numeric_limits<double>::infinity();
  for (int n = -3; n <= 3; ++n) {
    const double dt = t2 - t1 + 2.0 * std::numbers::pi * n;
    best = std::min(best, std::hypot(dt, h2 - h1));
  }
  return best;
}

/// Star with `arms` arms of length `len`, points given as (arm, r) with r
/// the distance to the center.
inline double star_distance(int arm1, double r1, int arm2, double r2) {
  if (r1 == 0.0 || r2 == 0.0 || arm1 == arm2) return arm1 == arm2 ? std::abs(r1 - r2) : r1 + r2;
  return r1 + r2;
}

/// sup_p (p v - H(p)) by dense grid search on [0, p_max].
inline double conjugate(const std::function<double(double)>& H, double v, double p_max, int n) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    const double p = p_max * i / n;
    best = std::max(best, p * v - H(p));
  }
  return best;
}

/// Hopf-Lax inf on a 1-D grid with no radius cut: min over every grid node.
inline double hopf_lax_1d(const std::vector<double>& grid, const std::function<double(double)>& u0,
                          const std::function<double(double)>& L, double x, double t) {
  double best = std::numeric_limits<double>::infinity();
  for (double a : grid) best = std::min(best, u0(a) + t * L(std::abs(x - a) / t));
  return best;
}

}  // namespace oracle
