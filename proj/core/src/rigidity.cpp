#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hjconvex/lattice_checks.hpp"

namespace hjc {
namespace {

__extension__ typedef __int128 i128;

struct Row {
  std::vector<i128> a;
  i128 b;  // a . u >= b
};

i128 gcd128(i128 x, i128 y) {
  if (x < 0) x = -x;
  if (y < 0) y = -y;
  while (y != 0) {
    const i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

void normalize(Row& r) {
  i128 g = r.b;
  for (auto v : r.a) g = gcd128(g, v);
  if (g <= 1) return;
  for (auto& v : r.a) v /= g;
  r.b /= g;
}

bool feasible(std::vector<Row> rows, std::size_t vars) {
  for (std::size_t j = 0; j < vars; ++j) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.a[j] > 0) pos.push_back(r);
      else if (r.a[j] < 0) neg.push_back(r);
      else next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Row c;
        c.a.resize(vars);
        const i128 wp = -n.a[j], wn = p.a[j];
        for (std::size_t k = 0; k < vars; ++k) c.a[k] = wp * p.a[k] + wn * n.a[k];
        c.b = wp * p.b + wn * n.b;
        normalize(c);
        next.push_back(std::move(c));
      }
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r.b > 0) return false;  // 0 >= b fails
  return true;
}

}  // namespace

bool has_nonzero_solution(const std::vector<LinearInequality>& system, std::size_t vars) {
  std::vector<Row> base;
  for (const auto& q : system) {
    if (q.a.size() != vars) throw DomainError("inequality has the wrong number of coefficients");
    base.push_back({std::vector<i128>(q.a.begin(), q.a.end()), 0});
  }
  // The solution set is a cone, so a nonzero solution exists iff some
  // coordinate can be pushed to +1 or -1.
  for (std::size_t k = 0; k < vars; ++k)
    for (int sign : {1, -1}) {
      auto rows = base;
      Row extra{std::vector<i128>(vars, 0), 1};
      extra.a[k] = sign;
      rows.push_back(extra);
      if (feasible(rows, vars)) return true;
    }
  return false;
}

double patch_value(const std::vector<double>& v, const LatticePoint& p) {
  auto at = [&](std::int64_t i, std::int64_t j) {
    if (i < 0 || i > 2 || j < 0 || j > 2) throw DomainError("point outside the 3x3 patch");
    return v[static_cast<std::size_t>(3 * j + i)];
  };
  if (p.x1.is_integer() && p.x2.is_integer()) return at(p.x1.numerator(), p.x2.numerator());
  if (!p.x1.is_integer()) {
    const auto i = p.x1.floor_int();
    const double tau = (p.x1 - Dyadic(i)).to_double();
    const auto j = p.x2.numerator();
    return (1.0 - tau) * at(i, j) + tau * at(i + 1, j);
  }
  const auto j = p.x2.floor_int();
  const double tau = (p.x2 - Dyadic(j)).to_double();
  const auto i = p.x1.numerator();
  return (1.0 - tau) * at(i, j) + tau * at(i, j + 1);
}

RigidityReport lattice_rigidity_check(std::size_t trials, std::uint64_t seed, double tau) {
  RigidityReport rep;
  // Variables u(1,0), u(0,1), u(1,1) with u(0,0) = 0.
  rep.three = {{{-2, 0, 1}, "u(1,1) >= 2 u(1,0)"},
               {{0, -2, 1}, "u(1,1) >= 2 u(0,1)"},
               {{1, 1, -2}, "u(0,1) + u(1,0) >= 2 u(1,1)"}};
  rep.three_unique = !has_nonzero_solution(rep.three, 3);
  for (std::int64_t a = -3; a <= 3 && !rep.three_counterexample; ++a)
    for (std::int64_t b = -3; b <= 3 && !rep.three_counterexample; ++b)
      for (std::int64_t c = -3; c <= 3 && !rep.three_counterexample; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        if (c >= 2 * a && c >= 2 * b && a + b >= 2 * c)
          rep.three_counterexample = std::vector<std::int64_t>{a, b, c};
      }
  // Every corner of the unit cell: variables u00, u10, u01, u11.
  rep.cell = {{{1, -2, 0, 1}, "u(0,0) + u(1,1) >= 2 u(1,0)"},
              {{1, 0, -2, 1}, "u(0,0) + u(1,1) >= 2 u(0,1)"},
              {{0, 1, 1, -2}, "u(1,0) + u(0,1) >= 2 u(1,1)"},
              {{-2, 1, 1, 0}, "u(1,0) + u(0,1) >= 2 u(0,0)"}};
  auto anchored = rep.cell;
  anchored.push_back({{1, 0, 0, 0}, "u(0,0) >= 0"});
  anchored.push_back({{-1, 0, 0, 0}, "u(0,0) <= 0"});
  rep.cell_unique_with_anchor = !has_nonzero_solution(anchored, 4);
  bool translation_invariant = true;
  for (const auto& q : rep.cell)
    translation_invariant &= std::accumulate(q.a.begin(), q.a.end(), std::int64_t{0}) == 0;
  rep.cell_unique_up_to_constants = rep.cell_unique_with_anchor && translation_invariant;

  // Randomized search on the 3x3 patch at h = 1/2.
  const Lattice2 patch(1, {0, 2, 0, 2});
  const auto pts = patch.sample_points();
  struct PairGeom {
    std::size_t i, j;
    std::vector<LatticePoint> mids;
  };
  std::vector<PairGeom> geom;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      geom.push_back({i, j, patch.midpoints(pts[i], pts[j])});
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> sample_vals(pts.size());
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<double> v(9);
    const double base = U(rng);
    switch (trial % 5) {
      case 0:  // unstructured
        for (auto& x : v) x = U(rng);
        break;
      case 1: {  // affine
        const double a = U(rng), b = U(rng);
        for (int j = 0; j < 3; ++j)
          for (int i = 0; i < 3; ++i) v[3 * j + i] = base + a * i + b * j;
        break;
      }
      case 2: {  // small perturbation of a constant
        const double amp = std::pow(10.0, -7.0 + 2.0 * (U(rng) + 1.0));
        for (auto& x : v) x = base + amp * U(rng);
        break;
      }
      case 3: {  // l1 cone, convex in the plane
        const double c1 = 2.0 * U(rng) + 1.0, c2 = 2.0 * U(rng) + 1.0, w = U(rng);
        for (int j = 0; j < 3; ++j)
          for (int i = 0; i < 3; ++i) v[3 * j + i] = base + w * (std::abs(i - c1) + std::abs(j - c2));
        break;
      }
      default:  // constant
        for (auto& x : v) x = base;
    }
    for (std::size_t k = 0; k < pts.size(); ++k) sample_vals[k] = patch_value(v, pts[k]);
    double worst = INFINITY;
    for (const auto& g : geom) {
      double low = INFINITY;
      for (const auto& z : g.mids) low = std::min(low, 2.0 * patch_value(v, z));
      worst = std::min(worst, sample_vals[g.i] + sample_vals[g.j] - low);
      if (worst < -tau) break;
    }
    ++rep.trials;
    if (worst >= -tau) {
      ++rep.passing;
      const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
      const double spread = *hi - *lo;
      rep.max_passing_spread = std::max(rep.max_passing_spread, spread);
      if (spread > 10.0 * tau) ++rep.passing_nonconstant;
    }
  }
  rep.pass = rep.three_unique && rep.passing_nonconstant == 0;
  return rep;
}

}  // namespace hjc
