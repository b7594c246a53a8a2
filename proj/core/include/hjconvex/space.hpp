#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "hjconvex/error.hpp"

namespace hjc {

/// Interface shared by every metric space in the library.
///
/// Points are totally ordered; that order is the canonical enumeration
/// order used for deterministic tie-breaking. ball_sample returns the
/// resolution-h sample of the closed ball, sorted, always containing the
/// center. midpoints returns the full (finite) midpoint set, sorted.
template <class S>
concept GeodesicSpace = requires(const S& s, const typename S::Point& p, double r,
                                 std::size_t b) {
  requires std::totally_ordered<typename S::Point>;
  { s.distance(p, p) } -> std::convertible_to<double>;
  { s.point_at_distance(p, p, r, b) } -> std::same_as<typename S::Point>;
  { s.branch_count(p, p) } -> std::convertible_to<std::size_t>;
  { s.midpoints(p, p) } -> std::same_as<std::vector<typename S::Point>>;
  { s.ball_sample(p, r) } -> std::same_as<std::vector<typename S::Point>>;
  { s.sample_points() } -> std::same_as<std::vector<typename S::Point>>;
  { s.resolution() } -> std::convertible_to<double>;
  { s.eps_mid() } -> std::convertible_to<double>;
  { s.name() } -> std::convertible_to<std::string>;
};

/// gamma(s) on branch `branch` of the geodesics from x to y, s in [0, 1].
template <GeodesicSpace S>
typename S::Point geodesic_point(const S& space, const typename S::Point& x,
                                 const typename S::Point& y, double s, std::size_t branch = 0) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("geodesic parameter outside [0, 1]");
  return space.point_at_distance(x, y, s * space.distance(x, y), branch);
}

/// Distance comparison at the midpoint resolution of the space.
template <GeodesicSpace S>
bool near_equal(const S& space, double a, double b) {
  return std::abs(a - b) <= space.eps_mid() * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

/// True iff z lies in M(x, y).
template <GeodesicSpace S>
bool is_midpoint(const S& space, const typename S::Point& x, const typename S::Point& y,
                 const typename S::Point& z) {
  const double half = 0.5 * space.distance(x, y);
  return near_equal(space, space.distance(x, z), half) &&
         near_equal(space, space.distance(z, y), half);
}

/// Separation point for a chain x, y, z: a point w with d(x,w) <= d(y,z)
/// and d(w,z) <= d(x,y).
///
/// If d(x,y) >= d(y,z) the point sits on the geodesic x -> y at distance
/// d(y,z) from x; otherwise on the geodesic y -> z at distance d(x,y) from z.
template <GeodesicSpace S>
typename S::Point separate(const S& space, const typename S::Point& x,
                           const typename S::Point& y, const typename S::Point& z) {
  const double dxy = space.distance(x, y);
  const double dyz = space.distance(y, z);
  if (dxy >= dyz) return space.point_at_distance(x, y, dyz, 0);
  return space.point_at_distance(y, z, dyz - dxy, 0);
}

/// Sorts and removes exact duplicates.
template <class P>
void sort_unique(std::vector<P>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

/// Inserts p into a sorted, duplicate-free vector if it is missing.
template <class P>
void insert_sorted(std::vector<P>& pts, const P& p) {
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  if (it == pts.end() || !(*it == p)) pts.insert(it, p);
}

}  // namespace hjc
