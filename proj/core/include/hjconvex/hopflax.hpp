#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hjconvex/error.hpp"
#include "hjconvex/field.hpp"
#include "hjconvex/hamiltonian.hpp"
#include "hjconvex/parallel.hpp"
#include "hjconvex/space.hpp"

namespace hjc {

/// inf: u = inf_a {u0(a) + t L(d(a,x)/t)}, solving u_t + H(|grad u|) = 0.
/// sup: u = sup_a {u0(a) - t L(d(a,x)/t)}, solving u_t - H(|grad u|) = 0.
enum class HopfLaxMode { inf, sup };

inline std::string to_string(HopfLaxMode m) { return m == HopfLaxMode::inf ? "inf" : "sup"; }

struct SolveOptions {
  unsigned threads = 1;
  /// Multiplies the candidate radius V t; 2 is used to confirm that the
  /// speed bound does not cut off minimizers.
  double radius_factor = 1.0;
};

template <class P>
struct PointSolution {
  double value;
  P witness;
  std::size_t candidates;
};

template <class P>
struct SolveReport {
  ScalarField<P> field;
  std::vector<P> witnesses;  // aligned with field.points()
  std::vector<std::size_t> candidates;
  HopfLaxMode mode = HopfLaxMode::inf;
  double t = 0.0;
  double speed = 0.0;   // V, or 1 for the eikonal path
  double radius = 0.0;  // candidate ball radius actually used
  double seconds = 0.0;
  bool eikonal = false;
};

/// Hopf-Lax value at one point. Candidates come from ball_sample(x, radius)
/// in canonical order; ties keep the earliest candidate.
template <GeodesicSpace S>
PointSolution<typename S::Point> hopf_lax_at(const S& space,
                                             const InitialDatum<typename S::Point>& u0,
                                             const Lagrangian& L, double t, HopfLaxMode mode,
                                             const typename S::Point& x, double radius) {
  if (t < 0.0) throw DomainError("time must be >= 0");
  if (t == 0.0) return {u0(x), x, 1};
  const auto cands = space.ball_sample(x, radius);
  const auto limit = L.speed_limit();
  const double sign = mode == HopfLaxMode::inf ? 1.0 : -1.0;
  bool found = false;
  double best = 0.0;
  typename S::Point arg = x;
  for (const auto& a : cands) {
    const double d = space.distance(a, x);
    double v = d / t;
    if (limit) {
      if (d > *limit * t * (1.0 + 1e-12) + 1e-12) continue;
      v = std::min(v, *limit);
    }
    const double cost = L(v);
    if (!std::isfinite(cost)) continue;
    const double val = u0(a) + sign * t * cost;
    if (!found || (mode == HopfLaxMode::inf ? val < best : val > best)) {
      best = val;
      arg = a;
      found = true;
    }
  }
  if (!found) throw NoFiniteCandidateError("every Hopf-Lax candidate has infinite cost");
  return {best, arg, cands.size()};
}

/// Eikonal value: inf (or sup) of u0 over the closed ball B_t(x).
template <GeodesicSpace S>
PointSolution<typename S::Point> eikonal_at(const S& space,
                                            const InitialDatum<typename S::Point>& u0, double t,
                                            HopfLaxMode mode, const typename S::Point& x) {
  if (t < 0.0) throw DomainError("time must be >= 0");
  const auto cands = space.ball_sample(x, t);
  double best = 0.0;
  typename S::Point arg = x;
  bool found = false;
  for (const auto& a : cands) {
    const double val = u0(a);
    if (!found || (mode == HopfLaxMode::inf ? val < best : val > best)) {
      best = val;
      arg = a;
      found = true;
    }
  }
  return {best, arg, cands.size()};
}

namespace detail {

template <class P, class Fn>
SolveReport<P> assemble(std::vector<P> points, unsigned threads, Fn&& at) {
  const auto t0 = std::chrono::steady_clock::now();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<double> vals(points.size());
  std::vector<P> wit(points.size());
  std::vector<std::size_t> cnt(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    auto r = at(points[i]);
    vals[i] = r.value;
    wit[i] = r.witness;
    cnt[i] = r.candidates;
  });
  SolveReport<P> rep;
  rep.field = ScalarField<P>(points, std::move(vals));
  rep.witnesses = std::move(wit);
  rep.candidates = std::move(cnt);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

template <class P>
double require_lipschitz(const InitialDatum<P>& u0) {
  if (!u0.lipschitz) throw MissingLipschitzError("initial datum '" + u0.name + "' has no Lipschitz constant");
  return *u0.lipschitz;
}

}  // namespace detail

template <GeodesicSpace S>
SolveReport<typename S::Point> solve_hopf_lax(const S& space,
                                              const InitialDatum<typename S::Point>& u0,
                                              const Lagrangian& L, double t, HopfLaxMode mode,
                                              std::vector<typename S::Point> points,
                                              const SolveOptions& opt = {}) {
  const double K = detail::require_lipschitz(u0);
  const double V = speed_bound(L, K);
  const double radius = V * t * opt.radius_factor;
  auto rep = detail::assemble(std::move(points), opt.threads, [&](const auto& x) {
    return hopf_lax_at(space, u0, L, t, mode, x, radius);
  });
  rep.field = ScalarField<typename S::Point>(rep.field.points(), rep.field.values(), K);
  rep.mode = mode;
  rep.t = t;
  rep.speed = V;
  rep.radius = radius;
  return rep;
}

template <GeodesicSpace S>
SolveReport<typename S::Point> solve_inf(const S& space, const InitialDatum<typename S::Point>& u0,
                                         const Lagrangian& L, double t,
                                         std::vector<typename S::Point> points,
                                         const SolveOptions& opt = {}) {
  return solve_hopf_lax(space, u0, L, t, HopfLaxMode::inf, std::move(points), opt);
}

template <GeodesicSpace S>
SolveReport<typename S::Point> solve_sup(const S& space, const InitialDatum<typename S::Point>& u0,
                                         const Lagrangian& L, double t,
                                         std::vector<typename S::Point> points,
                                         const SolveOptions& opt = {}) {
  return solve_hopf_lax(space, u0, L, t, HopfLaxMode::sup, std::move(points), opt);
}

template <GeodesicSpace S>
SolveReport<typename S::Point> solve_eikonal(const S& space,
                                             const InitialDatum<typename S::Point>& u0, double t,
                                             HopfLaxMode mode,
                                             std::vector<typename S::Point> points,
                                             const SolveOptions& opt = {}) {
  auto rep = detail::assemble(std::move(points), opt.threads,
                              [&](const auto& x) { return eikonal_at(space, u0, t, mode, x); });
  rep.field = ScalarField<typename S::Point>(rep.field.points(), rep.field.values(), u0.lipschitz);
  rep.mode = mode;
  rep.t = t;
  rep.speed = 1.0;
  rep.radius = t;
  rep.eikonal = true;
  return rep;
}

/// Lazily evaluated u(., t) for checks that query off-sample points.
template <GeodesicSpace S>
std::function<double(const typename S::Point&)> hopf_lax_evaluator(
    const S& space, const InitialDatum<typename S::Point>& u0, const Lagrangian& L, double t,
    HopfLaxMode mode) {
  const double radius = speed_bound(L, detail::require_lipschitz(u0)) * t;
  return [space, u0, L, t, mode, radius](const typename S::Point& x) {
    return hopf_lax_at(space, u0, L, t, mode, x, radius).value;
  };
}

template <GeodesicSpace S>
std::function<double(const typename S::Point&)> eikonal_evaluator(
    const S& space, const InitialDatum<typename S::Point>& u0, double t, HopfLaxMode mode) {
  return [space, u0, t, mode](const typename S::Point& x) {
    return eikonal_at(space, u0, t, mode, x).value;
  };
}

template <class P>
struct DppReport {
  double max_discrepancy = 0.0;
  P witness{};
  std::size_t tested = 0;
};

/// Dynamic programming check: compares u(x, t) with the Hopf-Lax step of
/// length t - s applied to u(., s); u(., s) is itself computed from u0.
/// With eikonal = true both sides use the ball formula.
template <GeodesicSpace S>
DppReport<typename S::Point> dpp_check(const S& space, const InitialDatum<typename S::Point>& u0,
                                       const Lagrangian& L, double t, double s, HopfLaxMode mode,
                                       const std::vector<typename S::Point>& points,
                                       bool eikonal = false, unsigned threads = 1) {
  using P = typename S::Point;
  if (!(0.0 <= s && s < t)) throw DomainError("dpp_check needs 0 <= s < t");
  const double V = eikonal ? 1.0 : speed_bound(L, detail::require_lipschitz(u0));
  auto direct_at = [&](const P& x, double tt) {
    return eikonal ? eikonal_at(space, u0, tt, mode, x).value
                   : hopf_lax_at(space, u0, L, tt, mode, x, V * tt).value;
  };
  const double step = t - s;
  const double step_radius = eikonal ? step : V * step;
  // Values of u(., s) on every candidate that any tested point needs.
  std::vector<P> needed;
  for (const auto& x : points)
    for (const auto& a : space.ball_sample(x, step_radius)) needed.push_back(a);
  sort_unique(needed);
  std::vector<double> mid(needed.size());
  parallel_for(needed.size(), threads, [&](std::size_t i) { mid[i] = direct_at(needed[i], s); });
  InitialDatum<P> us{[&](const P& a) {
                       auto it = std::lower_bound(needed.begin(), needed.end(), a);
                       return mid[static_cast<std::size_t>(it - needed.begin())];
                     },
                     u0.lipschitz, "u_s"};
  std::vector<double> gap(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    const double d = direct_at(points[i], t);
    const double c = eikonal ? eikonal_at(space, us, step, mode, points[i]).value
                             : hopf_lax_at(space, us, L, step, mode, points[i], step_radius).value;
    gap[i] = std::abs(d - c);
  });
  DppReport<P> rep;
  rep.tested = points.size();
  for (std::size_t i = 0; i < points.size(); ++i)
    if (gap[i] > rep.max_discrepancy || i == 0) {
      rep.max_discrepancy = gap[i];
      rep.witness = points[i];
    }
  return rep;
}

struct AlphaGap {
  double alpha = 0.0;
  double max_gap = 0.0;  // sup_x (u_alpha - u_limit)
  double min_gap = 0.0;  // inf_x (u_alpha - u_limit)
  double upper_bound = 0.0;
  double lower_bound = 0.0;
  double speed = 0.0;  // V_alpha
  bool within_bounds = false;
};

/// Solutions for H = p^alpha/alpha compared with the eikonal limit
/// u = inf_{B_t(x)} u0, against the two-sided bound
///   -K (V_alpha - 1) t - eps <= u_alpha - u <= (alpha - 1) t / alpha + eps,
/// with V_alpha = (alpha K / (alpha - 1))^(alpha - 1).
template <GeodesicSpace S>
std::vector<AlphaGap> alpha_family(const S& space, const InitialDatum<typename S::Point>& u0,
                                   const std::vector<double>& alphas, double t,
                                   const std::vector<typename S::Point>& points, double eps,
                                   unsigned threads = 1) {
  const double K = detail::require_lipschitz(u0);
  const auto limit = solve_eikonal(space, u0, t, HopfLaxMode::inf, points, {threads});
  std::vector<AlphaGap> out;
  for (double a : alphas) {
    const auto L = legendre(Hamiltonian::power(a));
    const auto sol = solve_inf(space, u0, L, t, points, {threads});
    AlphaGap g;
    g.alpha = a;
    g.speed = std::pow(a / (a - 1.0) * K, a - 1.0);
    g.upper_bound = (a - 1.0) * t / a + eps;
    g.lower_bound = -K * (g.speed - 1.0) * t - eps;
    g.max_gap = -std::numeric_limits<double>::infinity();
    g.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sol.field.size(); ++i) {
      const double d = sol.field.values()[i] - limit.field.values()[i];
      g.max_gap = std::max(g.max_gap, d);
      g.min_gap = std::min(g.min_gap, d);
    }
    g.within_bounds = g.max_gap <= g.upper_bound && g.min_gap >= g.lower_bound;
    out.push_back(g);
  }
  return out;
}

struct ResidualReport {
  double max_residual = 0.0;
  double at = 0.0;
  std::size_t tested = 0;
  std::size_t skipped = 0;
};

/// Finite-difference residual of u_t + sign * H(|u_x|) = 0 on a uniform 1-D
/// grid (sign = +1 for the inf formula, -1 for the sup formula). Points whose
/// one-sided slopes differ by more than kink_tol at either time level are
/// skipped as non-differentiable.
ResidualReport residual_check(const std::vector<double>& xs, const std::vector<double>& u_t,
                              const std::vector<double>& u_next, double dt,
                              const Hamiltonian& H, double sign, double kink_tol);

}  // namespace hjc
