#include "hjconvex/spaces/euclidean.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hjconvex/error.hpp"
#include "hjconvex/space.hpp"

namespace hjc {

EuclideanPoint::EuclideanPoint(std::initializer_list<double> coords) {
  if (coords.size() == 0 || coords.size() > kMaxDim)
    throw DomainError("euclidean point dimension must be 1..4");
  dim = static_cast<std::uint8_t>(coords.size());
  std::size_t i = 0;
  for (double v : coords) c[i++] = v;
}

EuclideanSpace::EuclideanSpace(int dim, double p, double h, double lo, double hi)
    : dim_(dim), p_(p), h_(h), lo_(lo), hi_(hi) {
  if (dim < 1 || dim > static_cast<int>(EuclideanPoint::kMaxDim))
    throw DomainError("euclidean dimension must be 1..4");
  if (!(p > 1.0)) throw DomainError("l^p exponent must satisfy p > 1");
  if (!(h > 0.0)) throw DomainError("resolution h must be positive");
  if (!(hi >= lo)) throw DomainError("empty sampling window");
}

std::string EuclideanSpace::name() const {
  std::string pn = std::isinf(p_) ? "inf" : std::to_string(p_);
  return "euclidean(dim=" + std::to_string(dim_) + ",p=" + pn + ")";
}

EuclideanSpace::Point EuclideanSpace::make(std::initializer_list<double> coords) const {
  Point pt(coords);
  check(pt);
  return pt;
}

void EuclideanSpace::check(const Point& x) const {
  if (x.dim != dim_) throw DomainError("point dimension does not match the space");
}

double EuclideanSpace::norm(const Point& v) const {
  if (std::isinf(p_)) {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i) m = std::max(m, std::abs(v[i]));
    return m;
  }
  if (dim_ == 1) return std::abs(v[0]);
  if (p_ == 2.0) {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += v[i] * v[i];
    return std::sqrt(s);
  }
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += std::pow(std::abs(v[i]), p_);
  return std::pow(s, 1.0 / p_);
}

double EuclideanSpace::distance(const Point& x, const Point& y) const {
  Point d;
  d.dim = x.dim;
  for (int i = 0; i < dim_; ++i) d[i] = x[i] - y[i];
  return norm(d);
}

std::size_t EuclideanSpace::branch_count(const Point& x, const Point& y) const {
  if (!std::isinf(p_)) return 1;
  return sup_norm_midpoints(x, y).size();
}

EuclideanSpace::Point EuclideanSpace::point_at_distance(const Point& x, const Point& y,
                                                        double ell, std::size_t branch) const {
  check(x);
  check(y);
  const double D = distance(x, y);
  if (ell < 0.0 || ell > D * (1.0 + 1e-12) + 1e-15)
    throw DomainError("arc length outside [0, d(x,y)]");
  auto lerp = [&](const Point& a, const Point& b, double s) {
    Point r;
    r.dim = a.dim;
    for (int i = 0; i < dim_; ++i) r[i] = a[i] + s * (b[i] - a[i]);
    return r;
  };
  if (D == 0.0) {
    if (branch != 0) throw EnumerationError("branch index out of range");
    return x;
  }
  if (!std::isinf(p_)) {
    if (branch != 0) throw EnumerationError("branch index out of range");
    if (ell == D) return y;
    return lerp(x, y, ell / D);
  }
  // Sup norm: branch b is the broken segment through the b-th midpoint.
  auto mids = sup_norm_midpoints(x, y);
  if (branch >= mids.size()) throw EnumerationError("branch index out of range");
  const Point& z = mids[branch];
  if (ell <= 0.5 * D) return lerp(x, z, ell / (0.5 * D));
  if (ell == D) return y;
  return lerp(z, y, (ell - 0.5 * D) / (0.5 * D));
}

std::vector<EuclideanSpace::Point> EuclideanSpace::sup_norm_midpoints(const Point& x,
                                                                    const Point& y) const {
  const double D = distance(x, y);
  const double half = 0.5 * D;
  std::vector<std::vector<double>> choices(dim_);
  for (int i = 0; i < dim_; ++i) {
    const double a = std::min(x[i], y[i]);
    const double b = std::max(x[i], y[i]);
    const double lo = b - half;
    const double hi = a + half;
    const double mid = 0.5 * (x[i] + y[i]);
    choices[i].push_back(mid);
    if (hi - lo > 1e-12) {
      for (double k = std::ceil(lo / h_ - 1e-9); k * h_ <= hi + 1e-12; k += 1.0) {
        const double v = k * h_;
        if (v >= lo - 1e-12 && !(std::abs(v - mid) < 1e-12)) choices[i].push_back(v);
      }
      choices[i].push_back(lo);
      choices[i].push_back(hi);
    }
    std::sort(choices[i].begin(), choices[i].end());
    choices[i].erase(std::unique(choices[i].begin(), choices[i].end(),
                                 [](double u, double v) { return std::abs(u - v) < 1e-12; }),
                     choices[i].end());
  }
  std::vector<Point> out;
  Point cur;
  cur.dim = static_cast<std::uint8_t>(dim_);
  std::function<void(int)> rec = [&](int i) {
    if (i == dim_) {
      out.push_back(cur);
      return;
    }
    for (double v : choices[i]) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  sort_unique(out);
  return out;
}

std::vector<EuclideanSpace::Point> EuclideanSpace::midpoints(const Point& x,
                                                            const Point& y) const {
  check(x);
  check(y);
  if (std::isinf(p_)) return sup_norm_midpoints(x, y);
  Point m;
  m.dim = x.dim;
  for (int i = 0; i < dim_; ++i) m[i] = 0.5 * (x[i] + y[i]);
  return {m};
}

std::vector<EuclideanSpace::Point> EuclideanSpace::ball_sample(const Point& center,
                                                              double r) const {
  check(center);
  if (r < 0.0) throw DomainError("negative ball radius");
  std::vector<Point> out;
  std::array<long long, EuclideanPoint::kMaxDim> lo{}, hi{};
  for (int i = 0; i < dim_; ++i) {
    lo[i] = static_cast<long long>(std::ceil((center[i] - r) / h_ - 1e-9));
    hi[i] = static_cast<long long>(std::floor((center[i] + r) / h_ + 1e-9));
  }
  const double tol = 1e-12 * std::max(1.0, r);
  Point cur;
  cur.dim = static_cast<std::uint8_t>(dim_);
  std::function<void(int)> rec = [&](int i) {
    if (i == dim_) {
      if (distance(center, cur) <= r + tol) out.push_back(cur);
      return;
    }
    for (long long k = lo[i]; k <= hi[i]; ++k) {
      cur[i] = static_cast<double>(k) * h_;
      rec(i + 1);
    }
  };
  rec(0);
  insert_sorted(out, center);
  return out;
}

std::vector<EuclideanSpace::Point> EuclideanSpace::sample_points() const {
  std::vector<Point> out;
  const auto klo = static_cast<long long>(std::ceil(lo_ / h_ - 1e-9));
  const auto khi = static_cast<long long>(std::floor(hi_ / h_ + 1e-9));
  Point cur;
  cur.dim = static_cast<std::uint8_t>(dim_);
  std::function<void(int)> rec = [&](int i) {
    if (i == dim_) {
      out.push_back(cur);
      return;
    }
    for (long long k = klo; k <= khi; ++k) {
      cur[i] = static_cast<double>(k) * h_;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace hjc
