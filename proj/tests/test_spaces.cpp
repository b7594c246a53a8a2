#include <doctest.h>

#include <numbers>
#include <random>

#include "hjconvex/error.hpp"
#include "hjconvex/space.hpp"
#include "hjconvex/spaces/any_space.hpp"
#include "oracles.hpp"

using namespace hjc;
constexpr double kPi = std::numbers::pi;

namespace {

// Symmetry, triangle inequality and the midpoint equations on sampled points.
template <GeodesicSpace S>
void metric_axioms(const S& X, std::size_t trials, std::uint64_t seed) {
  const auto pts = X.sample_points();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto& x = pts[pick(rng)];
    const auto& y = pts[pick(rng)];
    const auto& w = pts[pick(rng)];
    const double dxy = X.distance(x, y);
    CHECK(dxy == doctest::Approx(X.distance(y, x)).epsilon(1e-12));
    CHECK(X.distance(x, x) == 0.0);
    CHECK(dxy <= X.distance(x, w) + X.distance(w, y) + 1e-12);
    for (const auto& z : X.midpoints(x, y)) CHECK(is_midpoint(X, x, y, z));
    for (std::size_t b = 0; b < X.branch_count(x, y); ++b)
      CHECK(is_midpoint(X, x, y, geodesic_point(X, x, y, 0.5, b)));
    const auto g = geodesic_point(X, x, y, 0.25, 0);
    CHECK(X.distance(x, g) == doctest::Approx(0.25 * dxy).epsilon(1e-9));
    CHECK(X.distance(g, y) == doctest::Approx(0.75 * dxy).epsilon(1e-9));
  }
}

template <GeodesicSpace S>
void ball_sample_is_inside(const S& X, const typename S::Point& c, double r) {
  const auto ball = X.ball_sample(c, r);
  CHECK(!ball.empty());
  for (const auto& p : ball) CHECK(X.distance(c, p) <= r * (1.0 + 1e-9) + 1e-12);
}

}  // namespace

TEST_CASE("euclidean p-norms") {
  const EuclideanSpace E(2, 3.0, 0.25);
  CHECK(E.distance(E.make({0, 0}), E.make({1, 1})) == doctest::Approx(std::cbrt(2.0)));
  const auto m = E.midpoints(E.make({-1, 0}), E.make({1, 1}));
  REQUIRE(m.size() == 1);
  CHECK(m[0][0] == 0.0);
  CHECK(m[0][1] == 0.5);
  metric_axioms(E, 300, 1);
  ball_sample_is_inside(E, E.make({0.1, -0.3}), 0.5);
  CHECK_THROWS_AS(geodesic_point(E, E.make({0, 0}), E.make({1, 0}), 1.5, 0), DomainError);
}

TEST_CASE("sup norm has many midpoints") {
  const EuclideanSpace E(2, EuclideanSpace::kInfinity, 0.25);
  const auto m = E.midpoints(E.make({0, 0}), E.make({1, 0}));
  CHECK(m.size() > 1);
  for (const auto& z : m) {
    CHECK(z[0] == 0.5);
    CHECK(std::abs(z[1]) <= 0.5);
  }
  metric_axioms(E, 200, 2);
}

TEST_CASE("half-line") {
  const HalfLine X(0.1, 3.0);
  CHECK(X.distance({0.5}, {2.0}) == doctest::Approx(1.5));
  CHECK(X.midpoints({0.0}, {1.0}).front().x == doctest::Approx(0.5));
  for (const auto& p : X.ball_sample({0.05}, 0.3)) CHECK(p.x >= 0.0);
  CHECK_THROWS(X.make(-1.0));
  metric_axioms(X, 300, 3);
}

TEST_CASE("cylinder distance matches the unwrapped scan") {
  const Cylinder C(0.1, -1.0, 1.0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> th(0.0, 2 * kPi), ht(-1.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    const auto a = C.make(th(rng), ht(rng)), b = C.make(th(rng), ht(rng));
    CHECK(C.distance(a, b) == doctest::Approx(oracle::cylinder_distance(a.theta, a.height, b.theta, b.height)).epsilon(1e-12));
  }
  metric_axioms(C, 300, 5);
}

TEST_CASE("cylinder antipodal midpoints") {
  const Cylinder C(0.125, -1.0, 1.0);
  const CylinderPoint o{0.0, 0.0}, a{kPi, 0.0};
  const auto m = C.midpoints(o, a);
  REQUIRE(m.size() == 2);
  CHECK(m[0].theta == doctest::Approx(kPi / 2));
  CHECK(m[1].theta == doctest::Approx(3 * kPi / 2));
  CHECK(C.branch_count(o, a) == 2);
  CHECK(geodesic_point(C, o, a, 0.5, 1).theta == doctest::Approx(3 * kPi / 2));
  CHECK(C.midpoints(o, CylinderPoint{1.0, 0.5}).size() == 1);
}

TEST_CASE("lattice distance equals Dijkstra on the subdivided graph") {
  const Lattice2 L(1, {-1, 1, -1, 1});
  const oracle::SubdividedLattice G(1, -2, 2, -2, 2);
  const auto pts = L.sample_points();
  for (const auto& a : pts) {
    const auto s = G.scale();
    const auto d = G.distances_from((a.x1 * Dyadic(s)).floor_int(), (a.x2 * Dyadic(s)).floor_int());
    for (const auto& b : pts) {
      std::size_t idx = 0;
      const std::int64_t bx = (b.x1 * Dyadic(s)).floor_int(), by = (b.x2 * Dyadic(s)).floor_int();
      for (; idx < G.nodes().size(); ++idx)
        if (G.nodes()[idx] == std::pair{bx, by}) break;
      REQUIRE(idx < G.nodes().size());
      CHECK(L.exact_distance(a, b) == Dyadic::fraction(d[idx], 1));
    }
  }
}

TEST_CASE("lattice midpoint sets are exact") {
  const Lattice2 L(2, {-20, 20, -20, 20});
  const LatticePoint x{Dyadic(5), Dyadic(4)}, y{Dyadic(4), Dyadic(12)};
  const std::vector<LatticePoint> want{{Dyadic(4), Dyadic::fraction(15, 1)},
                                       {Dyadic::fraction(9, 1), Dyadic(8)},
                                       {Dyadic(5), Dyadic::fraction(17, 1)}};
  CHECK(L.midpoints(x, y) == want);
  // Across a unit cell strip the path must leave through a vertex.
  const LatticePoint p{Dyadic::fraction(1, 1), Dyadic(0)}, q{Dyadic::fraction(1, 1), Dyadic(1)};
  CHECK(L.exact_distance(p, q) == Dyadic(2));
  const auto m = L.midpoints({Dyadic(0), Dyadic(0)}, {Dyadic(2), Dyadic(4)});
  CHECK(std::find(m.begin(), m.end(), LatticePoint{Dyadic(2), Dyadic(1)}) != m.end());
  CHECK(std::find(m.begin(), m.end(), LatticePoint{Dyadic(0), Dyadic(3)}) != m.end());
  for (const auto& z : m) CHECK(L.on_graph(z));
  metric_axioms(L, 300, 6);
  ball_sample_is_inside(L, {Dyadic::fraction(1, 1), Dyadic(0)}, 1.5);
}

TEST_CASE("star tree distances and midpoints") {
  const auto T = MetricTree::star(3, 1.0, 0.125);
  for (int e1 = 0; e1 < 3; ++e1)
    for (int e2 = 0; e2 < 3; ++e2)
      for (double r1 : {0.0, 0.25, 1.0})
        for (double r2 : {0.125, 0.5}) {
          const auto a = T.make(e1, r1), b = T.make(e2, r2);
          CHECK(T.distance(a, b) == doctest::Approx(oracle::star_distance(e1, r1, e2, r2)));
        }
  const auto m = T.midpoints(T.make(0, 1.0), T.make(1, 0.5));
  REQUIRE(m.size() == 1);
  CHECK(T.distance(T.vertex(0), m[0]) == doctest::Approx(0.25));
  metric_axioms(T, 300, 7);
  ball_sample_is_inside(T, T.vertex(0), 0.5);
}

TEST_CASE("cross coordinates") {
  const auto X = MetricTree::cross(4.0, 0.125, 2.0);
  for (const auto& p : X.sample_points()) {
    const auto [a, b] = X.cross_coordinates(p);
    CHECK(std::abs(a) + std::abs(b) == doctest::Approx(X.distance(X.vertex(0), p)));
    CHECK((a == 0.0 || b == 0.0));
  }
}

TEST_CASE("make_space builds every kind") {
  SpaceConfig c;
  for (const std::string kind : {"euclidean", "halfline", "cylinder", "lattice", "star", "cross"}) {
    c.kind = kind;
    c.h = 0.25;
    c.lattice_level = 1;
    c.arm_length = 2.0;
    const auto s = make_space(c);
    std::visit([](const auto& X) { CHECK(!X.sample_points().empty()); }, s);
  }
  c.kind = "moebius";
  CHECK_THROWS_AS(make_space(c), DomainError);
}
