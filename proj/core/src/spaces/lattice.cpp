#include "hjconvex/spaces/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hjconvex/error.hpp"
#include "hjconvex/space.hpp"

namespace hjc {
namespace {

struct Anchor {
  std::int64_t v1, v2;
  Dyadic cost;
};

// Endpoints of the unit edge carrying p, with the arc length to each.
int anchors(const LatticePoint& p, std::array<Anchor, 2>& out) {
  if (p.x1.is_integer() && p.x2.is_integer()) {
    out[0] = {p.x1.numerator(), p.x2.numerator(), Dyadic(0)};
    return 1;
  }
  if (!p.x1.is_integer()) {
    const auto lo = p.x1.floor_int();
    out[0] = {lo, p.x2.numerator(), p.x1 - Dyadic(lo)};
    out[1] = {lo + 1, p.x2.numerator(), Dyadic(lo + 1) - p.x1};
    return 2;
  }
  const auto lo = p.x2.floor_int();
  out[0] = {p.x1.numerator(), lo, p.x2 - Dyadic(lo)};
  out[1] = {p.x1.numerator(), lo + 1, Dyadic(lo + 1) - p.x2};
  return 2;
}

bool same_open_edge(const LatticePoint& a, const LatticePoint& b) {
  if (!a.x1.is_integer() && !b.x1.is_integer())
    return a.x2 == b.x2 && a.x1.floor_int() == b.x1.floor_int();
  if (!a.x2.is_integer() && !b.x2.is_integer())
    return a.x1 == b.x1 && a.x2.floor_int() == b.x2.floor_int();
  return false;
}

Dyadic abs_diff(std::int64_t a, std::int64_t b) { return Dyadic(a > b ? a - b : b - a); }

}  // namespace

Lattice2::Lattice2(int m, Box box, std::optional<std::int64_t> l1_radius)
    : m_(m), box_(box), l1_radius_(l1_radius) {
  if (m < 0 || m > 20) throw DomainError("lattice resolution 2^-m needs 0 <= m <= 20");
  if (box.x1_hi < box.x1_lo || box.x2_hi < box.x2_lo) throw DomainError("empty lattice box");
}

Lattice2::Point Lattice2::make(Dyadic x1, Dyadic x2) const {
  Point p{x1, x2};
  if (!on_graph(p)) throw DomainError("point is not on the lattice graph");
  return p;
}

Dyadic Lattice2::exact_distance(const Point& a, const Point& b) const {
  if (!on_graph(a) || !on_graph(b)) throw DomainError("point is not on the lattice graph");
  if (a == b) return Dyadic(0);
  if (same_open_edge(a, b)) return (a.x1 == b.x1 ? a.x2 - b.x2 : a.x1 - b.x1).abs();
  std::array<Anchor, 2> pa, pb;
  const int na = anchors(a, pa);
  const int nb = anchors(b, pb);
  bool first = true;
  Dyadic best;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      Dyadic d = pa[i].cost + pb[j].cost + abs_diff(pa[i].v1, pb[j].v1) +
                 abs_diff(pa[i].v2, pb[j].v2);
      if (first || d < best) best = d;
      first = false;
    }
  return best;
}

std::vector<Lattice2::Point> Lattice2::points_at(const Point& a, const Point& b,
                                                 const Dyadic& ell) const {
  const Dyadic D = exact_distance(a, b);
  if (ell < Dyadic(0) || ell > D) throw DomainError("arc length outside [0, d(x,y)]");
  const Dyadic rest = D - ell;
  const std::int64_t i0 = min(a.x1, b.x1).floor_int(), i1 = max(a.x1, b.x1).ceil_int();
  const std::int64_t j0 = min(a.x2, b.x2).floor_int(), j1 = max(a.x2, b.x2).ceil_int();
  std::vector<Point> out;

  // On a closed unit edge lo + tau * e, d(a, .) is either |tau - tau_a| (a on
  // the edge) or min(d(a,lo) + tau, d(a,hi) + 1 - tau); solve each piece for
  // ell and keep the exact solutions.
  auto scan_edge = [&](const Point& lo, bool horizontal) {
    auto at = [&](const Dyadic& tau) {
      return horizontal ? Point{lo.x1 + tau, lo.x2} : Point{lo.x1, lo.x2 + tau};
    };
    const Point hi = at(Dyadic(1));
    std::array<Dyadic, 4> cand;
    int nc = 0;
    const bool a_inside = horizontal ? (!a.x1.is_integer() && a.x2 == lo.x2 &&
                                        a.x1.floor_int() == lo.x1.numerator())
                                     : (!a.x2.is_integer() && a.x1 == lo.x1 &&
                                        a.x2.floor_int() == lo.x2.numerator());
    if (a_inside) {
      const Dyadic ta = horizontal ? a.x1 - lo.x1 : a.x2 - lo.x2;
      cand[nc++] = ta - ell;
      cand[nc++] = ta + ell;
    }
    cand[nc++] = ell - exact_distance(a, lo);
    cand[nc++] = Dyadic(1) - (ell - exact_distance(a, hi));
    for (int k = 0; k < nc; ++k) {
      if (cand[k] < Dyadic(0) || cand[k] > Dyadic(1)) continue;
      const Point z = at(cand[k]);
      if (exact_distance(a, z) == ell && exact_distance(z, b) == rest) out.push_back(z);
    }
  };
  for (std::int64_t j = j0; j <= j1; ++j)
    for (std::int64_t i = i0; i < i1; ++i) scan_edge(Point{Dyadic(i), Dyadic(j)}, true);
  for (std::int64_t i = i0; i <= i1; ++i)
    for (std::int64_t j = j0; j < j1; ++j) scan_edge(Point{Dyadic(i), Dyadic(j)}, false);
  if (i0 == i1 && j0 == j1) out.push_back(a);  // a == b is a vertex
  sort_unique(out);
  return out;
}

std::size_t Lattice2::branch_count(const Point& a, const Point& b) const {
  return midpoints(a, b).size();
}

Lattice2::Point Lattice2::point_at_distance(const Point& a, const Point& b, double ell,
                                            std::size_t branch) const {
  const auto pts = points_at(a, b, Dyadic::from_double(ell));
  if (branch >= pts.size()) throw EnumerationError("branch index out of range");
  return pts[branch];
}

std::vector<Lattice2::Point> Lattice2::midpoints(const Point& a, const Point& b) const {
  return points_at(a, b, exact_distance(a, b).half());
}

std::vector<Lattice2::Point> Lattice2::ball_sample(const Point& center, double r) const {
  if (!on_graph(center)) throw DomainError("point is not on the lattice graph");
  if (r < 0.0) throw DomainError("negative ball radius");
  std::vector<Point> out;
  const double scale = std::ldexp(1.0, m_);
  const double c1 = center.x1.to_double(), c2 = center.x2.to_double();
  auto keep = [&](const Point& p) {
    if (exact_distance(center, p).to_double() <= r) out.push_back(p);
  };
  const auto col_lo = static_cast<std::int64_t>(std::ceil(c1 - r));
  const auto col_hi = static_cast<std::int64_t>(std::floor(c1 + r));
  const auto k2_lo = static_cast<std::int64_t>(std::ceil((c2 - r) * scale));
  const auto k2_hi = static_cast<std::int64_t>(std::floor((c2 + r) * scale));
  for (std::int64_t i = col_lo; i <= col_hi; ++i)
    for (std::int64_t k = k2_lo; k <= k2_hi; ++k) keep(Point{Dyadic(i), Dyadic::fraction(k, m_)});
  const auto row_lo = static_cast<std::int64_t>(std::ceil(c2 - r));
  const auto row_hi = static_cast<std::int64_t>(std::floor(c2 + r));
  const auto k1_lo = static_cast<std::int64_t>(std::ceil((c1 - r) * scale));
  const auto k1_hi = static_cast<std::int64_t>(std::floor((c1 + r) * scale));
  for (std::int64_t j = row_lo; j <= row_hi; ++j)
    for (std::int64_t k = k1_lo; k <= k1_hi; ++k) {
      const Dyadic x1 = Dyadic::fraction(k, m_);
      if (!x1.is_integer()) keep(Point{x1, Dyadic(j)});
    }
  sort_unique(out);
  insert_sorted(out, center);
  return out;
}

std::vector<Lattice2::Point> Lattice2::sample_points() const {
  std::vector<Point> out;
  const std::int64_t n = std::int64_t{1} << m_;
  auto inside = [&](const Point& p) {
    if (!l1_radius_) return true;
    return p.x1.abs() + p.x2.abs() <= Dyadic(*l1_radius_);
  };
  for (std::int64_t i = box_.x1_lo; i <= box_.x1_hi; ++i)
    for (std::int64_t k = box_.x2_lo * n; k <= box_.x2_hi * n; ++k) {
      Point p{Dyadic(i), Dyadic::fraction(k, m_)};
      if (inside(p)) out.push_back(p);
    }
  for (std::int64_t j = box_.x2_lo; j <= box_.x2_hi; ++j)
    for (std::int64_t k = box_.x1_lo * n; k <= box_.x1_hi * n; ++k) {
      const Dyadic x1 = Dyadic::fraction(k, m_);
      Point p{x1, Dyadic(j)};
      if (!x1.is_integer() && inside(p)) out.push_back(p);
    }
  sort_unique(out);
  return out;
}

}  // namespace hjc
