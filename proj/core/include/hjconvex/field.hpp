#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hjconvex/error.hpp"

namespace hjc {

/// Initial datum u0 given as a function, with its Lipschitz constant when
/// known.
template <class P>
struct InitialDatum {
  std::function<double(const P&)> f;
  std::optional<double> lipschitz;
  std::string name;

  double operator()(const P& p) const { return f(p); }
};

/// Finite map from sample points to values, stored in canonical point order.
template <class P>
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(std::vector<P> points, std::vector<double> values,
              std::optional<double> lipschitz = std::nullopt)
      : lipschitz_(lipschitz) {
    if (points.size() != values.size()) throw DomainError("field points/values size mismatch");
    std::vector<std::size_t> idx(points.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    points_.reserve(idx.size());
    values_.reserve(idx.size());
    for (std::size_t i : idx) {
      if (!points_.empty() && points_.back() == points[i]) continue;
      points_.push_back(points[i]);
      values_.push_back(values[i]);
    }
  }

  const std::vector<P>& points() const { return points_; }
  const std::vector<double>& values() const { return values_; }
  std::optional<double> lipschitz() const { return lipschitz_; }
  std::size_t size() const { return points_.size(); }

  std::optional<double> find(const P& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || !(*it == p)) return std::nullopt;
    return values_[static_cast<std::size_t>(it - points_.begin())];
  }

  double at(const P& p) const {
    if (auto v = find(p)) return *v;
    throw ResolutionError("field has no sample at the requested point");
  }

 private:
  std::vector<P> points_;
  std::vector<double> values_;
  std::optional<double> lipschitz_;
};

/// What the convexity and structure checks consume: the sample points to
/// draw test configurations from, and an evaluator that may also answer
/// off-sample queries (midpoints, ball samples).
template <class P>
struct FieldView {
  std::vector<P> samples;
  std::function<double(const P&)> eval;
  std::optional<double> lipschitz;

  double operator()(const P& p) const { return eval(p); }
};

template <class P>
FieldView<P> view_of(const ScalarField<P>& f) {
  auto shared = std::make_shared<ScalarField<P>>(f);
  return {f.points(), [shared](const P& p) { return shared->at(p); }, f.lipschitz()};
}

template <class P>
FieldView<P> view_of(const InitialDatum<P>& u0, std::vector<P> samples) {
  return {std::move(samples), u0.f, u0.lipschitz};
}

}  // namespace hjc
