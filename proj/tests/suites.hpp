#pragma once

// Randomized suites shared by the property tests and the acceptance binary.

#include <string>
#include <vector>

#include "hjconvex/convexity.hpp"
#include "hjconvex/hopflax.hpp"
#include "hjconvex/presets.hpp"
#include "hjconvex/sampling.hpp"
#include "hjconvex/spaces/any_space.hpp"

namespace suites {

struct PreservationRow {
  std::string space;
  int preset = 0;
  double t = 0.0;
  double margin = 0.0;
  double bound = 0.0;  // -5 K h
  bool pass() const { return margin >= bound; }
};

/// Convex-family presets solved with H = p^2/2; weak geodesic convexity of
/// u(., t) on seeded sample pairs.
template <hjc::GeodesicSpace S>
void preservation(const S& X, const std::string& label, int presets, const std::vector<double>& times,
                  unsigned threads, std::vector<PreservationRow>& out, std::size_t budget = 2000) {
  const auto L = hjc::legendre(hjc::Hamiltonian::power(2.0));
  const auto samples = X.sample_points();
  for (int i = 0; i < presets; ++i) {
    hjc::PresetSpec spec{"convex-family"};
    spec.seed = 1000 + static_cast<std::uint64_t>(i);
    spec.index = i;
    const auto u0 = hjc::make_preset(X, spec);
    const double K = *u0.lipschitz;
    for (double t : times) {
      hjc::FieldView<typename S::Point> f{samples, hjc::hopf_lax_evaluator(X, u0, L, t, hjc::HopfLaxMode::inf), K};
      f = hjc::memoize(f);
      hjc::CheckOptions o;
      o.tau = 5.0 * K * X.resolution();
      o.budget = budget;
      o.seed = spec.seed;
      o.threads = threads;
      const auto r = hjc::check_weak_geodesic(X, f, o);
      out.push_back({label, i, t, r.worst_margin, -o.tau});
    }
  }
}

/// The four spaces of the preservation suite.
inline void preservation_all(int presets, unsigned threads, std::vector<PreservationRow>& out,
                             std::size_t budget = 2000) {
  const std::vector<double> times{0.25, 0.5, 1.0};
  preservation(hjc::EuclideanSpace(1, 2.0, 0.02, -1.0, 1.0), "euclidean dim=1", presets, times, threads, out, budget);
  preservation(hjc::EuclideanSpace(2, 2.0, 0.1, -1.0, 1.0), "euclidean dim=2", presets, times, threads, out, budget);
  preservation(hjc::MetricTree::star(3, 1.0, 0.05), "star3", presets, times, threads, out, budget);
  preservation(hjc::Cylinder(0.1, -1.0, 1.0), "cylinder", presets, times, threads, out, budget);
}

}  // namespace suites
