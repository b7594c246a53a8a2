#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "hjconvex/convexity.hpp"
#include "hjconvex/spaces/cylinder.hpp"
#include "hjconvex/spaces/lattice.hpp"

namespace hjc {

/// max over z in M(a,b), z' in M(c,d) of d(z, z').
template <GeodesicSpace S>
double max_midpoint_gap(const S& space, const std::vector<typename S::Point>& m1,
                        const std::vector<typename S::Point>& m2,
                        typename S::Point* za = nullptr, typename S::Point* zb = nullptr) {
  double best = -1.0;
  for (const auto& z : m1)
    for (const auto& zp : m2) {
      const double d = space.distance(z, zp);
      if (d > best) {
        best = d;
        if (za) *za = z;
        if (zb) *zb = zp;
      }
    }
  return best;
}

/// Configurations that must always be tested on a given space: the
/// lattice staircase triple ((0,0), (0,2k), (k,2k)) for k = 1, 2 and the
/// antipodal triple on the cylinder.
inline std::vector<std::array<LatticePoint, 3>> adversarial_triples(const Lattice2&) {
  std::vector<std::array<LatticePoint, 3>> out;
  for (std::int64_t k : {1, 2})
    out.push_back({LatticePoint{0, 0}, LatticePoint{0, 2 * k}, LatticePoint{k, 2 * k}});
  return out;
}
inline std::vector<std::array<CylinderPoint, 3>> adversarial_triples(const Cylinder&) {
  const CylinderPoint o{0.0, 0.0}, a{std::numbers::pi, 0.0};
  return {{o, a, a}, {o, a, CylinderPoint{std::numbers::pi, 0.5}}};
}
template <class S>
std::vector<std::array<typename S::Point, 3>> adversarial_triples(const S&) {
  return {};
}

namespace detail {

template <GeodesicSpace S>
double busemann3_margin(const S& space, const typename S::Point& x, const typename S::Point& y,
                        const typename S::Point& yp, typename S::Point* z,
                        typename S::Point* zp) {
  const double gap = max_midpoint_gap(space, space.midpoints(x, y), space.midpoints(x, yp), z, zp);
  return space.distance(y, yp) - 2.0 * gap;
}

}  // namespace detail

/// Three-point Busemann condition 2 d(z, z') <= d(y, y') for all midpoints
/// z of (x, y) and z' of (x, y'), over the space's adversarial triples and
/// seeded triples of `pts`. Witness: x, y, y', z, z'. Margins of the
/// adversarial triples are listed in details["named"].
template <GeodesicSpace S>
CheckReport<typename S::Point> check_busemann3(const S& space,
                                               const std::vector<typename S::Point>& pts,
                                               const CheckOptions& opt = {}) {
  using P = typename S::Point;
  std::vector<std::array<P, 3>> triples = adversarial_triples(space);
  const std::size_t named = triples.size();
  for (const auto& t : select_tuples<3>(pts.size(), opt.budget, opt.seed))
    triples.push_back({pts[t[0]], pts[t[1]], pts[t[2]]});
  std::vector<double> m(triples.size());
  std::vector<std::array<P, 2>> zz(triples.size());
  parallel_for(triples.size(), opt.threads, [&](std::size_t k) {
    m[k] = detail::busemann3_margin(space, triples[k][0], triples[k][1], triples[k][2],
                                    &zz[k][0], &zz[k][1]);
  });
  CheckReport<P> rep;
  rep.notion = "busemann3";
  rep.tau = opt.tau;
  nlohmann::json jn = nlohmann::json::array();
  for (std::size_t k = 0; k < triples.size(); ++k) {
    rep.record(m[k], {triples[k][0], triples[k][1], triples[k][2], zz[k][0], zz[k][1]});
    if (k < named) {
      nlohmann::json pts_j = nlohmann::json::array();
      for (const auto& p : {triples[k][0], triples[k][1], triples[k][2], zz[k][0], zz[k][1]})
        pts_j.push_back(point_json(space, p));
      jn.push_back({{"margin", m[k]}, {"points", pts_j}});
    }
  }
  rep.finish();
  rep.details["named"] = jn;
  return rep;
}

/// Four-point Busemann condition 2 d(z, z') <= d(x, x') + d(y, y').
template <GeodesicSpace S>
CheckReport<typename S::Point> check_busemann4(const S& space,
                                               const std::vector<typename S::Point>& pts,
                                               const CheckOptions& opt = {}) {
  using P = typename S::Point;
  std::vector<std::array<P, 4>> quads;
  for (const auto& t : adversarial_triples(space)) quads.push_back({t[0], t[1], t[0], t[2]});
  for (const auto& t : select_tuples<4>(pts.size(), opt.budget, opt.seed))
    quads.push_back({pts[t[0]], pts[t[1]], pts[t[2]], pts[t[3]]});
  std::vector<double> m(quads.size());
  std::vector<std::array<P, 2>> zz(quads.size());
  parallel_for(quads.size(), opt.threads, [&](std::size_t k) {
    const auto& [x, y, xp, yp] = quads[k];
    const double gap =
        max_midpoint_gap(space, space.midpoints(x, y), space.midpoints(xp, yp), &zz[k][0], &zz[k][1]);
    m[k] = space.distance(x, xp) + space.distance(y, yp) - 2.0 * gap;
  });
  CheckReport<P> rep;
  rep.notion = "busemann4";
  rep.tau = opt.tau;
  for (std::size_t k = 0; k < quads.size(); ++k)
    rep.record(m[k], {quads[k][0], quads[k][1], quads[k][2], quads[k][3], zz[k][0], zz[k][1]});
  rep.finish();
  return rep;
}

template <class P>
struct EquivalenceReport {
  CheckReport<P> three;
  CheckReport<P> four;
  bool agree = false;
};

/// Exhaustive three- and four-point checks on the same finite set B; the
/// two conditions are equivalent, so the verdicts must agree.
template <GeodesicSpace S>
EquivalenceReport<typename S::Point> check_equivalence_3_4(
    const S& space, const std::vector<typename S::Point>& B, const CheckOptions& opt = {}) {
  using P = typename S::Point;
  const std::size_t n = B.size();
  std::vector<std::vector<P>> mid(n * n);
  parallel_for(n * n, opt.threads, [&](std::size_t k) { mid[k] = space.midpoints(B[k / n], B[k % n]); });
  std::vector<double> dist(n * n);
  for (std::size_t k = 0; k < n * n; ++k) dist[k] = space.distance(B[k / n], B[k % n]);
  EquivalenceReport<P> rep;
  rep.three.notion = "busemann3-exhaustive";
  rep.four.notion = "busemann4-exhaustive";
  rep.three.tau = rep.four.tau = opt.tau;
  // gap[(a,b),(c,d)] is needed for all pairs of pairs; compute row by row.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<double> m4(n * n);
      parallel_for(n * n, opt.threads, [&](std::size_t k) {
        const std::size_t xp = k / n, yp = k % n;
        const double gap = max_midpoint_gap(space, mid[x * n + y], mid[xp * n + yp]);
        m4[k] = dist[x * n + xp] + dist[y * n + yp] - 2.0 * gap;
      });
      for (std::size_t k = 0; k < n * n; ++k) {
        const std::size_t xp = k / n, yp = k % n;
        rep.four.record(m4[k], {B[x], B[y], B[xp], B[yp]});
        if (xp == x) rep.three.record(m4[k], {B[x], B[y], B[yp]});
      }
    }
  rep.three.finish();
  rep.four.finish();
  rep.agree = rep.three.pass == rep.four.pass;
  return rep;
}

/// Uniform nonpositive curvature at scale delta: the three-point condition
/// for all x, y, y' in B_delta(p), for every center p in `centers`.
/// details["max_abs_margin"] measures how far from equality the test is.
template <GeodesicSpace S>
CheckReport<typename S::Point> check_uniform_npc(const S& space, double delta,
                                                 const std::vector<typename S::Point>& centers,
                                                 const CheckOptions& opt = {}) {
  using P = typename S::Point;
  std::vector<std::array<P, 3>> triples;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const auto ball = space.ball_sample(centers[c], delta);
    for (const auto& t : select_tuples<3>(ball.size(), opt.budget, opt.seed + c))
      triples.push_back({ball[t[0]], ball[t[1]], ball[t[2]]});
  }
  std::vector<double> m(triples.size());
  std::vector<std::array<P, 2>> zz(triples.size());
  parallel_for(triples.size(), opt.threads, [&](std::size_t k) {
    m[k] = detail::busemann3_margin(space, triples[k][0], triples[k][1], triples[k][2],
                                    &zz[k][0], &zz[k][1]);
  });
  CheckReport<P> rep;
  rep.notion = "uniform-npc";
  rep.tau = opt.tau;
  double max_abs = 0.0;
  for (std::size_t k = 0; k < triples.size(); ++k) {
    rep.record(m[k], {triples[k][0], triples[k][1], triples[k][2], zz[k][0], zz[k][1]});
    max_abs = std::max(max_abs, std::abs(m[k]));
  }
  rep.finish();
  rep.details["delta"] = delta;
  rep.details["centers"] = centers.size();
  rep.details["max_abs_margin"] = max_abs;
  return rep;
}

/// Largest passing delta in [lo, hi] by bisection (assumes monotonicity).
template <GeodesicSpace S>
std::optional<double> search_uniform_npc(const S& space,
                                         const std::vector<typename S::Point>& centers, double lo,
                                         double hi, int iterations, const CheckOptions& opt = {}) {
  if (!check_uniform_npc(space, lo, centers, opt).pass) return std::nullopt;
  if (check_uniform_npc(space, hi, centers, opt).pass) return hi;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    (check_uniform_npc(space, mid, centers, opt).pass ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace hjc
