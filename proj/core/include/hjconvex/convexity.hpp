#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "hjconvex/field.hpp"
#include "hjconvex/parallel.hpp"
#include "hjconvex/report.hpp"
#include "hjconvex/sampling.hpp"
#include "hjconvex/space.hpp"

namespace hjc {

struct CheckOptions {
  double tau = 1e-9;
  std::size_t budget = 4000;  // pairs, triples or centers, depending on the check
  std::uint64_t seed = 1;
  unsigned threads = 1;
  /// Only test pairs with d(x, y) <= this.
  std::optional<double> max_pair_distance;
};

/// Weak (inf over M(x,y)) or strong (sup over M(x,y)) geodesic convexity:
///   2 f(z) <= f(x) + f(y).
/// Pairs: `named` first, then all or seeded-random sample pairs.
template <GeodesicSpace S>
CheckReport<typename S::Point> check_weak_geodesic(
    const S& space, const FieldView<typename S::Point>& f, const CheckOptions& opt = {},
    bool strong = false,
    const std::vector<std::pair<typename S::Point, typename S::Point>>& named = {}) {
  using P = typename S::Point;
  std::vector<std::pair<P, P>> pairs = named;
  for (auto [i, j] : select_pairs(f.samples.size(), opt.budget, opt.seed))
    pairs.emplace_back(f.samples[i], f.samples[j]);
  struct Out {
    bool used = false;
    double margin = 0.0;
    P z{};
  };
  std::vector<Out> res(pairs.size());
  parallel_for(pairs.size(), opt.threads, [&](std::size_t k) {
    const auto& [x, y] = pairs[k];
    if (opt.max_pair_distance && space.distance(x, y) > *opt.max_pair_distance) return;
    const auto mids = space.midpoints(x, y);
    double ext = 0.0;
    P arg = mids.front();
    for (std::size_t m = 0; m < mids.size(); ++m) {
      const double v = 2.0 * f(mids[m]);
      if (m == 0 || (strong ? v > ext : v < ext)) {
        ext = v;
        arg = mids[m];
      }
    }
    res[k] = {true, f(x) + f(y) - ext, arg};
  });
  CheckReport<P> rep;
  rep.notion = strong ? "strong-geodesic" : "weak-geodesic";
  rep.tau = opt.tau;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!res[k].used) {
      ++rep.skipped;
      continue;
    }
    rep.record(res[k].margin, {pairs[k].first, pairs[k].second, res[k].z});
  }
  rep.finish();
  if (opt.max_pair_distance) rep.details["max_pair_distance"] = *opt.max_pair_distance;
  return rep;
}

template <class P>
struct LocalToGlobalReport {
  CheckReport<P> local;   // pairs with d <= delta, tolerance tau
  CheckReport<P> doubled; // pairs with d <= 2 delta, tolerance 2 tau
  bool precondition = false;
  bool pass = false;      // precondition holds and the doubled check passes
};

/// One doubling step: if f is weakly convex on pairs at distance <= delta,
/// verify it on pairs at distance <= 2 delta.
template <GeodesicSpace S>
LocalToGlobalReport<typename S::Point> check_local_to_global(
    const S& space, const FieldView<typename S::Point>& f, double delta,
    const CheckOptions& opt = {}) {
  CheckOptions a = opt, b = opt;
  a.max_pair_distance = delta;
  b.max_pair_distance = 2.0 * delta;
  b.tau = 2.0 * opt.tau;
  LocalToGlobalReport<typename S::Point> rep;
  rep.local = check_weak_geodesic(space, f, a);
  rep.local.notion = "local-weak-geodesic";
  rep.precondition = rep.local.pass;
  rep.doubled = check_weak_geodesic(space, f, b);
  rep.doubled.notion = "doubled-weak-geodesic";
  rep.pass = rep.precondition && rep.doubled.pass;
  return rep;
}

enum class SubharmoniousMode { uniform, plain };

/// Infinity-subharmonious test 2 f(z) <= max_{B_r(z)} f + min_{B_r(z)} f for
/// r in r_grid (r <= delta). Uniform mode needs every (z, r) to pass; plain
/// mode needs, for each z, the smallest radius to pass.
template <GeodesicSpace S>
CheckReport<typename S::Point> check_infty_subharmonious(
    const S& space, const FieldView<typename S::Point>& f, double delta,
    std::vector<double> r_grid, SubharmoniousMode mode, const CheckOptions& opt = {}) {
  using P = typename S::Point;
  std::sort(r_grid.begin(), r_grid.end());
  r_grid.erase(std::remove_if(r_grid.begin(), r_grid.end(),
                              [&](double r) { return !(r > 0.0 && r <= delta); }),
               r_grid.end());
  if (r_grid.empty()) throw DomainError("radius grid has no entry in (0, delta]");
  std::vector<P> zs = f.samples;
  if (zs.size() > opt.budget) {
    std::vector<P> pick;
    for (auto [i, j] : select_pairs(zs.size(), opt.budget / 2 + 1, opt.seed)) {
      pick.push_back(zs[i]);
      pick.push_back(zs[j]);
    }
    sort_unique(pick);
    zs = pick;
  }
  std::vector<std::vector<double>> margins(zs.size(), std::vector<double>(r_grid.size()));
  parallel_for(zs.size(), opt.threads, [&](std::size_t k) {
    const double fz = f(zs[k]);
    for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
      double hi = -INFINITY, lo = INFINITY;
      for (const auto& a : space.ball_sample(zs[k], r_grid[ri])) {
        const double v = f(a);
        hi = std::max(hi, v);
        lo = std::min(lo, v);
      }
      margins[k][ri] = hi + lo - 2.0 * fz;
    }
  });
  CheckReport<P> rep;
  rep.notion = mode == SubharmoniousMode::uniform ? "infty-subharmonious-uniform"
                                                  : "infty-subharmonious";
  rep.tau = opt.tau;
  std::size_t without_radius = 0;
  double smallest_delta_z = INFINITY;
  for (std::size_t k = 0; k < zs.size(); ++k) {
    if (mode == SubharmoniousMode::uniform) {
      for (std::size_t ri = 0; ri < r_grid.size(); ++ri) rep.record(margins[k][ri], {zs[k]});
      continue;
    }
    // Largest radius below which every grid radius passes.
    std::size_t ok = 0;
    while (ok < r_grid.size() && margins[k][ok] >= -opt.tau) ++ok;
    if (ok == 0) ++without_radius;
    else smallest_delta_z = std::min(smallest_delta_z, r_grid[ok - 1]);
    rep.record(margins[k][0], {zs[k]});
  }
  rep.finish();
  rep.details["r_grid"] = r_grid;
  rep.details["delta"] = delta;
  if (mode == SubharmoniousMode::plain) {
    rep.details["points_without_radius"] = without_radius;
    if (std::isfinite(smallest_delta_z)) rep.details["smallest_delta_z"] = smallest_delta_z;
  }
  return rep;
}

/// z is geodesically interior at radius r if every sample x of B_r(z) has a
/// partner y in B_r(z) with z in M(x, y); checked for each r in r_grid.
template <GeodesicSpace S>
bool geodesic_interior(const S& space, const typename S::Point& z,
                       const std::vector<double>& r_grid) {
  for (double r : r_grid) {
    const auto ball = space.ball_sample(z, r);
    for (const auto& x : ball) {
      if (x == z) continue;
      bool partner = false;
      for (const auto& y : ball)
        if (!(y == z) && is_midpoint(space, x, y, z)) {
          partner = true;
          break;
        }
      if (!partner) return false;
    }
  }
  return true;
}

/// Pointwise convexity at geodesically interior samples: for each r in
/// r_grid some x, y in B_r(z) \ {z} with z in M(x, y) satisfy
/// 2 f(z) <= f(x) + f(y). Non-interior samples are skipped.
template <GeodesicSpace S>
CheckReport<typename S::Point> check_pointwise(const S& space,
                                               const FieldView<typename S::Point>& f,
                                               const std::vector<double>& r_grid,
                                               const CheckOptions& opt = {}) {
  using P = typename S::Point;
  struct Out {
    bool interior = false;
    std::vector<double> best;
    std::vector<std::pair<P, P>> arg;
  };
  std::vector<Out> res(f.samples.size());
  parallel_for(f.samples.size(), opt.threads, [&](std::size_t k) {
    const P& z = f.samples[k];
    if (!geodesic_interior(space, z, r_grid)) return;
    Out o;
    o.interior = true;
    const double fz = f(z);
    for (double r : r_grid) {
      const auto ball = space.ball_sample(z, r);
      double best = -INFINITY;
      std::pair<P, P> arg{z, z};
      for (std::size_t i = 0; i < ball.size(); ++i) {
        if (ball[i] == z) continue;
        for (std::size_t j = i + 1; j < ball.size(); ++j) {
          if (ball[j] == z || !is_midpoint(space, ball[i], ball[j], z)) continue;
          const double m = f(ball[i]) + f(ball[j]) - 2.0 * fz;
          if (m > best) {
            best = m;
            arg = {ball[i], ball[j]};
          }
        }
      }
      o.best.push_back(best);
      o.arg.push_back(arg);
    }
    res[k] = std::move(o);
  });
  CheckReport<P> rep;
  rep.notion = "pointwise";
  rep.tau = opt.tau;
  nlohmann::json failing = nlohmann::json::array();
  for (std::size_t k = 0; k < res.size(); ++k) {
    if (!res[k].interior) {
      ++rep.skipped;
      continue;
    }
    // The point's margin is its worst radius.
    std::size_t w = 0;
    for (std::size_t ri = 1; ri < res[k].best.size(); ++ri)
      if (res[k].best[ri] < res[k].best[w]) w = ri;
    const double m = res[k].best[w];
    if (m < -opt.tau) failing.push_back(point_label(space, f.samples[k]));
    rep.record(m, {f.samples[k], res[k].arg[w].first, res[k].arg[w].second});
  }
  rep.finish();
  rep.details["failing_points"] = failing;
  rep.details["r_grid"] = r_grid;
  return rep;
}

/// Empirical Lipschitz constant: all sample pairs within distance 2h plus
/// budget seeded random pairs.
template <GeodesicSpace S>
CheckReport<typename S::Point> lipschitz_estimate(const S& space,
                                                  const FieldView<typename S::Point>& f,
                                                  const CheckOptions& opt = {}) {
  using P = typename S::Point;
  std::vector<std::pair<P, P>> pairs;
  const double near = 2.0 * space.resolution() * (1.0 + 1e-9);
  std::vector<P> sorted = f.samples;
  sort_unique(sorted);
  for (const auto& x : f.samples)
    for (const auto& y : space.ball_sample(x, near))
      if (x < y && std::binary_search(sorted.begin(), sorted.end(), y))
        pairs.emplace_back(x, y);
  for (auto [i, j] : select_pairs(f.samples.size(), opt.budget, opt.seed))
    pairs.emplace_back(f.samples[i], f.samples[j]);
  std::vector<double> ratio(pairs.size(), 0.0);
  parallel_for(pairs.size(), opt.threads, [&](std::size_t k) {
    const double d = space.distance(pairs[k].first, pairs[k].second);
    if (d > 0.0) ratio[k] = std::abs(f(pairs[k].first) - f(pairs[k].second)) / d;
  });
  CheckReport<P> rep;
  rep.notion = "lipschitz";
  double K = 0.0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    ++rep.tested;
    if (ratio[k] > K || rep.witness.empty()) {
      K = std::max(K, ratio[k]);
      rep.witness = {pairs[k].first, pairs[k].second};
    }
  }
  rep.worst_margin = f.lipschitz ? *f.lipschitz - K : INFINITY;
  rep.details["estimate"] = K;
  if (f.lipschitz) rep.details["declared"] = *f.lipschitz;
  rep.pass = true;
  return rep;
}

/// Midpoint stability: |d(z, m(x', y)) - d(z, m(x, y))| <= d(x, x')/2 on
/// seeded quadruples; margin is the slack of that inequality.
template <GeodesicSpace S>
CheckReport<typename S::Point> check_midpoint_stability(const S& space,
                                                        const std::vector<typename S::Point>& pts,
                                                        const CheckOptions& opt = {}) {
  using P = typename S::Point;
  const auto tuples = select_tuples<4>(pts.size(), opt.budget, opt.seed);
  std::vector<double> m(tuples.size());
  parallel_for(tuples.size(), opt.threads, [&](std::size_t k) {
    const P &z = pts[tuples[k][0]], &x = pts[tuples[k][1]], &xp = pts[tuples[k][2]],
            &y = pts[tuples[k][3]];
    const P a = space.midpoints(x, y).front();
    const P b = space.midpoints(xp, y).front();
    m[k] = 0.5 * space.distance(x, xp) - std::abs(space.distance(z, b) - space.distance(z, a));
  });
  CheckReport<P> rep;
  rep.notion = "midpoint-stability";
  rep.tau = opt.tau;
  for (std::size_t k = 0; k < tuples.size(); ++k)
    rep.record(m[k], {pts[tuples[k][0]], pts[tuples[k][1]], pts[tuples[k][2]], pts[tuples[k][3]]});
  rep.finish();
  return rep;
}

/// Convexity defect growth for a solution u(., t):
///   2 u(z) - u(x) - u(y) <= C (d(z, m(x, y)) + 3 t)
/// on seeded triples; margin is the slack.
template <GeodesicSpace S>
CheckReport<typename S::Point> check_convexity_growth(const S& space,
                                                      const FieldView<typename S::Point>& u,
                                                      double t, double C,
                                                      const CheckOptions& opt = {}) {
  using P = typename S::Point;
  const auto tuples = select_tuples<3>(u.samples.size(), opt.budget, opt.seed);
  std::vector<double> m(tuples.size());
  parallel_for(tuples.size(), opt.threads, [&](std::size_t k) {
    const P &z = u.samples[tuples[k][0]], &x = u.samples[tuples[k][1]],
            &y = u.samples[tuples[k][2]];
    const P mid = space.midpoints(x, y).front();
    m[k] = C * (space.distance(z, mid) + 3.0 * t) - (2.0 * u(z) - u(x) - u(y));
  });
  CheckReport<P> rep;
  rep.notion = "convexity-growth";
  rep.tau = opt.tau;
  for (std::size_t k = 0; k < tuples.size(); ++k)
    rep.record(m[k], {u.samples[tuples[k][0]], u.samples[tuples[k][1]], u.samples[tuples[k][2]]});
  rep.finish();
  rep.details["C"] = C;
  rep.details["t"] = t;
  return rep;
}

}  // namespace hjc
