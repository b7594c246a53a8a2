#include <doctest.h>

#include <cmath>

#include "hjconvex/error.hpp"
#include "hjconvex/hopflax.hpp"
#include "hjconvex/presets.hpp"
#include "hjconvex/spaces/any_space.hpp"
#include "oracles.hpp"

using namespace hjc;

namespace {

InitialDatum<HalfLinePoint> bowl() {
  return {[](const HalfLinePoint& p) { return (p.x - 1.5) * (p.x - 1.5); }, 5.0, "bowl"};
}

std::vector<double> grid_of(const HalfLine& X) {
  std::vector<double> g;
  for (const auto& p : X.sample_points()) g.push_back(p.x);
  return g;
}

}  // namespace

TEST_CASE("half-line Hopf-Lax inf equals the unrestricted grid minimum") {
  const HalfLine X(0.05, 4.0);
  const auto u0 = bowl();
  const auto L = legendre(Hamiltonian::power(2.0));
  const auto g = grid_of(X);
  for (double t : {0.1, 0.5, 1.0}) {
    const auto sol = solve_inf(X, u0, L, t, X.sample_points());
    for (std::size_t i = 0; i < sol.field.size(); ++i) {
      const double x = sol.field.points()[i].x;
      const double ref = oracle::hopf_lax_1d(g, [&](double a) { return u0({a}); },
                                             [&](double v) { return L(v); }, x, t);
      CHECK(sol.field.values()[i] == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("witness attains the reported value") {
  const HalfLine X(0.05, 4.0);
  const auto u0 = bowl();
  const auto L = legendre(Hamiltonian::power(2.0));
  const double t = 0.7;
  const auto sol = solve_sup(X, u0, L, t, X.sample_points());
  for (std::size_t i = 0; i < sol.field.size(); ++i) {
    const auto& x = sol.field.points()[i];
    const auto& w = sol.witnesses[i];
    CHECK(sol.field.values()[i] == doctest::Approx(u0(w) - t * L(X.distance(w, x) / t)).epsilon(1e-12));
  }
}

TEST_CASE("eikonal on the half-line has the closed form min(t - x, 0)") {
  const HalfLine X(0.01, 10.0);
  const auto u0 = make_preset(X, {"neg-x"});
  for (double t : {0.5, 1.0}) {
    const auto sol = solve_eikonal(X, u0, t, HopfLaxMode::sup, X.sample_points());
    for (std::size_t i = 0; i < sol.field.size(); ++i)
      CHECK(std::abs(sol.field.values()[i] - std::min(t - sol.field.points()[i].x, 0.0)) <= 0.01);
  }
}

TEST_CASE("lattice eikonal values match Dijkstra ball minima") {
  const Lattice2 X(2, {-20, 20, -20, 20}, 20);
  const auto u0 = make_preset(X, {"quadrant-product", 0.0, 0, 0, 20.0});
  const oracle::SubdividedLattice G(2, -6, 14, -6, 20);
  const auto s = G.scale();
  auto ref = [&](std::int64_t a, std::int64_t b) {
    const auto d = G.distances_from(a, b);
    double best = INFINITY;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] <= 4 * s) {
        const LatticePoint p{Dyadic::fraction(G.nodes()[i].first, 2), Dyadic::fraction(G.nodes()[i].second, 2)};
        best = std::min(best, u0(p));
      }
    return best;
  };
  const std::vector<std::pair<std::int64_t, std::int64_t>> q{{20, 16}, {16, 48}, {16, 30}, {18, 32}, {20, 34}};
  const std::vector<double> want{0.0, 12.0, 10.5, 12.0, 20.0};
  for (std::size_t k = 0; k < q.size(); ++k) {
    const LatticePoint x{Dyadic::fraction(q[k].first, 2), Dyadic::fraction(q[k].second, 2)};
    const double v = eikonal_at(X, u0, 4.0, HopfLaxMode::inf, x).value;
    CHECK(v == ref(q[k].first, q[k].second));
    CHECK(v == want[k]);
  }
}

TEST_CASE("cylinder height function moves down at unit speed") {
  const Cylinder C(0.125, -1.0, 1.0);
  const auto u0 = make_preset(C, {"height"});
  const auto sol = solve_eikonal(C, u0, 0.5, HopfLaxMode::inf, C.sample_points());
  for (std::size_t i = 0; i < sol.field.size(); ++i)
    CHECK(sol.field.values()[i] == doctest::Approx(sol.field.points()[i].height - 0.5).epsilon(1e-12));
}

TEST_CASE("star tree with distance to center and H = p^2/2") {
  const auto T = MetricTree::star(3, 1.0, 0.125);
  const auto u0 = make_preset(T, {"distance-to-center"});
  const auto L = legendre(Hamiltonian::power(2.0));
  const double t = 0.5;
  const auto sol = solve_inf(T, u0, L, t, T.sample_points());
  for (std::size_t i = 0; i < sol.field.size(); ++i) {
    const double d = T.distance(T.vertex(0), sol.field.points()[i]);
    CHECK(sol.field.values()[i] == doctest::Approx(d >= t ? d - t / 2 : d * d / (2 * t)).epsilon(1e-9));
  }
}

TEST_CASE("constants are preserved") {
  const EuclideanSpace E(2, 2.0, 0.25);
  const auto u0 = make_preset(E, {"constant", 3.5});
  for (auto mode : {HopfLaxMode::inf, HopfLaxMode::sup}) {
    const auto sol = solve_hopf_lax(E, u0, legendre(Hamiltonian::power(2.0)), 1.0, mode, E.sample_points());
    for (double v : sol.field.values()) CHECK(v == 3.5);
  }
}

TEST_CASE("thread count does not change values") {
  const EuclideanSpace E(2, 2.0, 0.1);
  const auto u0 = make_preset(E, {"norm"});
  const auto L = legendre(Hamiltonian::power(2.0));
  const auto a = solve_inf(E, u0, L, 0.5, E.sample_points(), {1});
  const auto b = solve_inf(E, u0, L, 0.5, E.sample_points(), {8});
  CHECK(a.field.values() == b.field.values());
  CHECK(a.field.points() == b.field.points());
}

TEST_CASE("doubling the candidate radius changes nothing") {
  const HalfLine X(0.05, 4.0);
  const auto u0 = bowl();
  const auto L = legendre(Hamiltonian::power(1.5));
  const auto a = solve_inf(X, u0, L, 0.5, X.sample_points(), {1, 1.0});
  const auto b = solve_inf(X, u0, L, 0.5, X.sample_points(), {1, 2.0});
  for (std::size_t i = 0; i < a.field.size(); ++i)
    CHECK(std::abs(a.field.values()[i] - b.field.values()[i]) <= 1e-12);
}

TEST_CASE("dynamic programming principle") {
  const HalfLine X(0.02, 4.0);
  const auto u0 = bowl();
  const auto r = dpp_check(X, u0, legendre(Hamiltonian::power(2.0)), 1.0, 0.4, HopfLaxMode::inf,
                           X.sample_points(), false, 4);
  CHECK(r.tested > 0);
  CHECK(r.max_discrepancy <= 0.04);
}

TEST_CASE("finite-difference residual of a smooth solution") {
  // u = x^2 / (2 (1 + t)) solves u_t + u_x^2 / 2 = 0.
  const double h = 0.01, dt = 0.05;
  std::vector<double> xs, a, b;
  for (int i = 0; i <= 200; ++i) {
    const double x = i * h;
    xs.push_back(x);
    a.push_back(x * x / 2.0);
    b.push_back(x * x / (2.0 * (1.0 + dt)));
  }
  const auto r = residual_check(xs, a, b, dt, Hamiltonian::power(2.0), 1.0, 0.5);
  CHECK(r.tested > 0);
  CHECK(r.max_residual <= 10.0 * (h / dt + dt));
}

TEST_CASE("solver error paths") {
  const HalfLine X(0.1, 2.0);
  const InitialDatum<HalfLinePoint> bare{[](const HalfLinePoint& p) { return p.x; }, std::nullopt, "bare"};
  const auto L = legendre(Hamiltonian::power(2.0));
  CHECK_THROWS_AS(solve_inf(X, bare, L, 1.0, X.sample_points()), MissingLipschitzError);
  CHECK_THROWS_AS(eikonal_at(X, bare, -1.0, HopfLaxMode::inf, HalfLinePoint{0.5}), DomainError);
  CHECK_THROWS_AS(dpp_check(X, bowl(), L, 1.0, 1.0, HopfLaxMode::inf, X.sample_points(), false, 1),
                  DomainError);
}

TEST_CASE("alpha family approaches the eikonal solution") {
  const HalfLine X(0.01, 10.0);
  const auto u0 = make_preset(X, {"neg-x"});
  const auto gaps = alpha_family(X, u0, {2.0, 1.5, 1.2, 1.05}, 1.0, X.sample_points(), 0.02, 4);
  REQUIRE(gaps.size() == 4);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    CHECK(gaps[i].within_bounds);
    if (i) CHECK(gaps[i].max_gap < gaps[i - 1].max_gap);
  }
  CHECK(gaps.back().max_gap <= 0.06 + 0.02);
}
