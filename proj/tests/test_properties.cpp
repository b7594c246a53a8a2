#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "suites.hpp"

using namespace hjc;

namespace {

template <GeodesicSpace S>
double sup_diff(const ScalarField<typename S::Point>& a, const ScalarField<typename S::Point>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
  return d;
}

template <GeodesicSpace S>
void order_properties(const S& X, int presets) {
  const auto L = legendre(Hamiltonian::power(2.0));
  const auto pts = X.sample_points();
  for (int i = 0; i < presets; ++i) {
    PresetSpec a{"convex-family"}, b{"convex-family"};
    a.seed = 7 + i;
    a.index = i;
    b.seed = 70 + i;
    b.index = i + 1;
    const auto u0 = make_preset(X, a), v0 = make_preset(X, b);
    double d0 = 0.0;
    for (const auto& p : pts) d0 = std::max(d0, std::abs(u0(p) - v0(p)));
    const double t = 0.5;
    const auto ui = solve_inf(X, u0, L, t, pts), vi = solve_inf(X, v0, L, t, pts);
    const auto us = solve_sup(X, u0, L, t, pts);
    CHECK(sup_diff<S>(ui.field, vi.field) <= d0 + 1e-12);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto& p = ui.field.points()[k];
      CHECK(ui.field.values()[k] <= u0(p) + 1e-12);
      CHECK(us.field.values()[k] >= u0(p) - 1e-12);
    }
    CheckOptions o;
    o.budget = 2000;
    const auto lip = lipschitz_estimate(X, view_of(ui.field), o);
    CHECK(lip.details["estimate"].template get<double>() <= *u0.lipschitz + 5.0 * X.resolution());
  }
}

}  // namespace

TEST_CASE("weak convexity is preserved on uniform Busemann spaces (sampled presets)") {
  std::vector<suites::PreservationRow> rows;
  suites::preservation_all(3, 4, rows, 1000);
  CHECK(rows.size() == 36);
  for (const auto& r : rows) {
    INFO(r.space << " preset " << r.preset << " t=" << r.t << " margin " << r.margin);
    CHECK(r.pass());
  }
}

TEST_CASE("order, contraction and Lipschitz properties") {
  order_properties(HalfLine(0.05, 4.0), 4);
  order_properties(MetricTree::star(3, 1.0, 0.1), 4);
  order_properties(Cylinder(0.2, -1.0, 1.0), 3);
  order_properties(EuclideanSpace(2, 2.0, 0.2), 3);
}

TEST_CASE("dynamic programming on random convex data") {
  const auto L = legendre(Hamiltonian::power(2.0));
  for (int i = 0; i < 4; ++i) {
    PresetSpec p{"convex-family"};
    p.seed = 300 + i;
    p.index = i;
    const HalfLine X(0.05, 4.0);
    const auto r = dpp_check(X, make_preset(X, p), L, 1.0, 0.5, HopfLaxMode::inf, X.sample_points(), false, 4);
    CHECK(r.max_discrepancy <= 2.0 * X.resolution());
    const auto T = MetricTree::star(3, 1.0, 0.1);
    const auto q = dpp_check(T, make_preset(T, p), L, 1.0, 0.5, HopfLaxMode::sup, T.sample_points(), false, 4);
    CHECK(q.max_discrepancy <= 2.0 * T.resolution());
  }
}

TEST_CASE("midpoint stability on Busemann spaces") {
  CheckOptions o;
  o.tau = 1e-12;
  o.budget = 10000;
  for (double p : {1.5, 2.0, 3.0}) {
    const EuclideanSpace E(2, p, 0.25);
    CHECK(check_midpoint_stability(E, E.sample_points(), o).pass);
  }
  const HalfLine X(0.1, 3.0);
  CHECK(check_midpoint_stability(X, X.sample_points(), o).pass);
}

TEST_CASE("solves are independent of the thread count") {
  const Cylinder C(0.1, -1.0, 1.0);
  PresetSpec p{"convex-family"};
  p.seed = 5;
  const auto u0 = make_preset(C, p);
  const auto L = legendre(Hamiltonian::power(2.0));
  const auto a = solve_inf(C, u0, L, 0.5, C.sample_points(), {1});
  const auto b = solve_inf(C, u0, L, 0.5, C.sample_points(), {8});
  CHECK(a.field.values() == b.field.values());
  CHECK(a.witnesses == b.witnesses);
}
