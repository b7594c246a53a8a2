#include <doctest.h>

#include <numbers>

#include "hjconvex/lattice_checks.hpp"
#include "hjconvex/spaces/any_space.hpp"
#include "hjconvex/structure.hpp"

using namespace hjc;
constexpr double kPi = std::numbers::pi;

namespace {
CheckOptions opts(double tau, std::size_t budget = 4000) {
  CheckOptions o;
  o.tau = tau;
  o.budget = budget;
  return o;
}
}  // namespace

TEST_CASE("Busemann on Euclidean spaces and trees") {
  for (double p : {1.5, 2.0, 3.0}) {
    const EuclideanSpace E(2, p, 0.25);
    CHECK(check_busemann3(E, E.sample_points(), opts(1e-12)).pass);
    CHECK(check_busemann4(E, E.sample_points(), opts(1e-12)).pass);
  }
  const auto T = MetricTree::star(3, 1.0, 0.25);
  CHECK(check_busemann3(T, T.sample_points(), opts(1e-12)).pass);
}

TEST_CASE("sup norm is not Busemann") {
  const EuclideanSpace E(2, EuclideanSpace::kInfinity, 0.25);
  CHECK_FALSE(check_busemann3(E, E.sample_points(), opts(1e-12)).pass);
}

TEST_CASE("grid graph Busemann witness") {
  const Lattice2 L(1, {-2, 2, -2, 2});
  const LatticePoint x{Dyadic(0), Dyadic(0)}, y{Dyadic(0), Dyadic(4)}, yp{Dyadic(2), Dyadic(4)};
  CHECK(detail::busemann3_margin(L, x, y, yp, nullptr, nullptr) == -4.0);
  const auto r = check_busemann3(L, L.sample_points(), opts(0.0));
  CHECK_FALSE(r.pass);
  CHECK(r.details["named"][1]["margin"] == -4.0);
}

TEST_CASE("cylinder is locally but not globally Busemann") {
  const Cylinder C(0.1, -1.0, 1.0);
  CHECK_FALSE(check_busemann3(C, C.sample_points(), opts(1e-12)).pass);
  const std::vector<CylinderPoint> centers{C.make(0.0, 0.0), C.make(2.0, 0.5)};
  const auto quarter = check_uniform_npc(C, kPi / 4, centers, opts(1e-12, 20000));
  CHECK(quarter.pass);
  CHECK(quarter.details["max_abs_margin"].get<double>() <= 1e-12);
  CHECK_FALSE(check_uniform_npc(C, kPi / 2 + 0.1, centers, opts(1e-12, 20000)).pass);
  const auto d = search_uniform_npc(C, centers, 0.2, 3.0, 12, opts(1e-12, 4000));
  REQUIRE(d.has_value());
  CHECK(*d >= kPi / 4);
  CHECK(*d <= kPi / 2 + 0.1);
}

TEST_CASE("grid graph is uniformly Busemann at small scale") {
  const Lattice2 L(3, {-1, 2, -1, 2});
  std::vector<LatticePoint> centers;
  for (const auto& p : L.sample_points())
    if (p.x1 >= Dyadic(0) && p.x1 <= Dyadic(1) && p.x2 >= Dyadic(0) && p.x2 <= Dyadic(1)) centers.push_back(p);
  CHECK(check_uniform_npc(L, 1.0 / 3.0, centers, opts(0.0, 20000)).pass);
}

TEST_CASE("three- and four-point conditions agree") {
  const Lattice2 L(1, {-2, 2, -2, 2});
  std::vector<LatticePoint> B;
  for (std::int64_t i = 0; i <= 4; ++i)
    for (std::int64_t j = 0; j <= 4; ++j) B.push_back({Dyadic(i), Dyadic(j)});
  const auto e = check_equivalence_3_4(L, B, opts(0.0));
  CHECK(e.agree);
  CHECK_FALSE(e.three.pass);
  const HalfLine X(0.5, 3.0);
  const auto h = check_equivalence_3_4(X, {{0.0}, {1.0}, {2.5}, {3.0}}, opts(1e-12));
  CHECK(h.agree);
  CHECK(h.three.pass);
}

TEST_CASE("midpoint stability on Busemann spaces") {
  const EuclideanSpace E(2, 2.0, 0.25);
  CHECK(check_midpoint_stability(E, E.sample_points(), opts(1e-12, 10000)).pass);
  const auto T = MetricTree::star(3, 1.0, 0.125);
  CHECK(check_midpoint_stability(T, T.sample_points(), opts(1e-12, 10000)).pass);
}

TEST_CASE("rigidity elimination") {
  CHECK_FALSE(has_nonzero_solution({{{1}, "u >= 0"}, {{-1}, "-u >= 0"}}, 1));
  CHECK(has_nonzero_solution({{{1, -1}, "u >= v"}}, 2));
  const auto r = lattice_rigidity_check(2000, 1, 1e-9);
  CHECK_FALSE(r.three_unique);
  REQUIRE(r.three_counterexample.has_value());
  for (const auto& q : r.three) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < q.a.size(); ++k) s += q.a[k] * (*r.three_counterexample)[k];
    CHECK(s >= 0);
  }
  CHECK(r.cell_unique_with_anchor);
  CHECK(r.cell_unique_up_to_constants);
  CHECK(r.passing > 0);
  CHECK(r.passing_nonconstant == 0);
}

TEST_CASE("patch interpolation") {
  std::vector<double> v(9);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) v[3 * j + i] = i + 10 * j;
  CHECK(patch_value(v, {Dyadic::fraction(1, 1), Dyadic(2)}) == 20.5);
  CHECK(patch_value(v, {Dyadic(1), Dyadic::fraction(3, 1)}) == 16.0);
}
