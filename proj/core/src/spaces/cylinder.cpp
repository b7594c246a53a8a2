#include "hjconvex/spaces/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hjconvex/error.hpp"
#include "hjconvex/space.hpp"

namespace hjc {
namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Cylinder::Cylinder(double h, double height_lo, double height_hi)
    : h_(h), lo_(height_lo), hi_(height_hi) {
  if (!(h > 0.0)) throw DomainError("resolution h must be positive");
  if (!(height_hi >= height_lo)) throw DomainError("empty sampling window");
  cells_ = std::max(3, static_cast<int>(std::lround(kTwoPi / h)));
  dtheta_ = kTwoPi / cells_;
}

double Cylinder::normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

Cylinder::Point Cylinder::grid_point(long long i, long long k) const {
  long long m = i % cells_;
  if (m < 0) m += cells_;
  return Point{static_cast<double>(m) * dtheta_, static_cast<double>(k) * h_};
}

double Cylinder::distance(const Point& a, const Point& b) const {
  const double dt = std::abs(b.theta - a.theta);
  const double wrapped = std::min(dt, kTwoPi - dt);
  return std::hypot(wrapped, b.height - a.height);
}

std::vector<int> Cylinder::windings(const Point& a, const Point& b) const {
  const double dt = b.theta - a.theta;
  const double dh = b.height - a.height;
  double best = std::numeric_limits<double>::infinity();
  double len[3];
  for (int n = -1; n <= 1; ++n) {
    len[n + 1] = std::hypot(dt + kTwoPi * n, dh);
    best = std::min(best, len[n + 1]);
  }
  std::vector<int> out;
  for (int n : {0, -1, 1})
    if (len[n + 1] <= best + eps_mid() * std::max(1.0, best)) out.push_back(n);
  return out;
}

Cylinder::Point Cylinder::point_at_distance(const Point& a, const Point& b, double ell,
                                            std::size_t branch) const {
  const auto ns = windings(a, b);
  if (branch >= ns.size()) throw EnumerationError("branch index out of range");
  const double dt = b.theta - a.theta + kTwoPi * ns[branch];
  const double dh = b.height - a.height;
  const double D = std::hypot(dt, dh);
  if (ell < 0.0 || ell > D * (1.0 + 1e-12) + 1e-15)
    throw DomainError("arc length outside [0, d(x,y)]");
  if (D == 0.0) return a;
  if (ell >= D) return b;
  const double s = ell / D;
  return Point{normalize_angle(a.theta + s * dt), a.height + s * dh};
}

std::vector<Cylinder::Point> Cylinder::midpoints(const Point& a, const Point& b) const {
  std::vector<Point> out;
  const auto ns = windings(a, b);
  for (std::size_t i = 0; i < ns.size(); ++i)
    out.push_back(point_at_distance(a, b, 0.5 * distance(a, b), i));
  sort_unique(out);
  return out;
}

std::vector<Cylinder::Point> Cylinder::ball_sample(const Point& center, double r) const {
  if (r < 0.0) throw DomainError("negative ball radius");
  std::vector<Point> out;
  const double tol = 1e-12 * std::max(1.0, r);
  long long ilo, ihi;
  if (r >= std::numbers::pi) {
    ilo = 0;
    ihi = cells_ - 1;
  } else {
    ilo = static_cast<long long>(std::floor((center.theta - r) / dtheta_));
    ihi = static_cast<long long>(std::ceil((center.theta + r) / dtheta_));
    if (ihi - ilo + 1 > cells_) {
      ilo = 0;
      ihi = cells_ - 1;
    }
  }
  const auto klo = static_cast<long long>(std::ceil((center.height - r) / h_ - 1e-9));
  const auto khi = static_cast<long long>(std::floor((center.height + r) / h_ + 1e-9));
  for (long long i = ilo; i <= ihi; ++i)
    for (long long k = klo; k <= khi; ++k) {
      Point p = grid_point(i, k);
      if (distance(center, p) <= r + tol) out.push_back(p);
    }
  // For an off-grid center, also the vertical and horizontal lines through
  // it, so that extremes along the cylinder axis are hit exactly.
  const Point snapped =
      grid_point(std::llround(center.theta / dtheta_), std::llround(center.height / h_));
  if (!(snapped == center)) {
    const auto kr = static_cast<long long>(std::floor(r / h_ + 1e-9));
    for (long long k = -kr; k <= kr; ++k)
      out.push_back(Point{center.theta, center.height + static_cast<double>(k) * h_});
    const auto ir = static_cast<long long>(std::floor(std::min(r, std::numbers::pi) / dtheta_ + 1e-9));
    for (long long i = -ir; i <= ir; ++i)
      out.push_back(Point{normalize_angle(center.theta + static_cast<double>(i) * dtheta_),
                          center.height});
  }
  sort_unique(out);
  insert_sorted(out, center);
  return out;
}

std::vector<Cylinder::Point> Cylinder::sample_points() const {
  std::vector<Point> out;
  const auto klo = static_cast<long long>(std::ceil(lo_ / h_ - 1e-9));
  const auto khi = static_cast<long long>(std::floor(hi_ / h_ + 1e-9));
  for (long long i = 0; i < cells_; ++i)
    for (long long k = klo; k <= khi; ++k) out.push_back(grid_point(i, k));
  return out;
}

}  // namespace hjc
