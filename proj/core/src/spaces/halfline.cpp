#include "hjconvex/spaces/halfline.hpp"

#include <cmath>

#include "hjconvex/error.hpp"
#include "hjconvex/space.hpp"

namespace hjc {

HalfLine::HalfLine(double h, double hi) : h_(h), hi_(hi) {
  if (!(h > 0.0)) throw DomainError("resolution h must be positive");
  if (!(hi >= 0.0)) throw DomainError("half-line window must satisfy hi >= 0");
}

HalfLine::Point HalfLine::make(double x) const {
  if (!(x >= 0.0)) throw DomainError("half-line point must be >= 0");
  return Point{x};
}

double HalfLine::distance(const Point& a, const Point& b) const {
  if (a.x < 0.0 || b.x < 0.0) throw DomainError("half-line point must be >= 0");
  return std::abs(a.x - b.x);
}

HalfLine::Point HalfLine::point_at_distance(const Point& a, const Point& b, double ell,
                                            std::size_t branch) const {
  if (branch != 0) throw EnumerationError("branch index out of range");
  const double D = distance(a, b);
  if (ell < 0.0 || ell > D * (1.0 + 1e-12) + 1e-15)
    throw DomainError("arc length outside [0, d(x,y)]");
  if (ell >= D) return b;
  return Point{a.x + (b.x >= a.x ? ell : -ell)};
}

std::vector<HalfLine::Point> HalfLine::midpoints(const Point& a, const Point& b) const {
  distance(a, b);
  return {Point{0.5 * (a.x + b.x)}};
}

std::vector<HalfLine::Point> HalfLine::ball_sample(const Point& center, double r) const {
  if (center.x < 0.0) throw DomainError("half-line point must be >= 0");
  if (r < 0.0) throw DomainError("negative ball radius");
  std::vector<Point> out;
  const double tol = 1e-12 * std::max(1.0, r);
  auto klo = static_cast<long long>(std::ceil((center.x - r) / h_ - 1e-9));
  if (klo < 0) klo = 0;
  const auto khi = static_cast<long long>(std::floor((center.x + r) / h_ + 1e-9));
  for (long long k = klo; k <= khi; ++k) {
    const double x = static_cast<double>(k) * h_;
    if (std::abs(x - center.x) <= r + tol) out.push_back(Point{x});
  }
  insert_sorted(out, center);
  return out;
}

std::vector<HalfLine::Point> HalfLine::sample_points() const {
  std::vector<Point> out;
  const auto khi = static_cast<long long>(std::floor(hi_ / h_ + 1e-9));
  for (long long k = 0; k <= khi; ++k) out.push_back(Point{static_cast<double>(k) * h_});
  return out;
}

}  // namespace hjc
