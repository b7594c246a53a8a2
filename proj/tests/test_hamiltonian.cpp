#include <doctest.h>

#include <cmath>

#include "hjconvex/error.hpp"
#include "hjconvex/hamiltonian.hpp"
#include "oracles.hpp"

using namespace hjc;

TEST_CASE("power conjugate matches a dense-grid sup") {
  for (double alpha : {1.5, 2.0, 3.0}) {
    const auto H = Hamiltonian::power(alpha);
    const auto L = legendre(H);
    CHECK(L.form() == Lagrangian::Form::power);
    for (double v : {0.0, 0.3, 1.0, 2.5}) {
      const double ref = oracle::conjugate([&](double p) { return H(p); }, v, 20.0, 400000);
      CHECK(L(v) == doctest::Approx(ref).epsilon(1e-6));
    }
  }
}

TEST_CASE("numeric conjugate agrees with the closed form") {
  LegendreOptions o;
  o.force_numeric = true;
  o.p_max = 50.0;
  const auto H = Hamiltonian::power(2.0);
  const auto Ln = legendre(H, o);
  const auto Lc = legendre(H);
  CHECK(Ln.form() == Lagrangian::Form::numeric);
  for (double v = 0.0; v <= 5.0; v += 0.125) CHECK(Ln(v) == doctest::Approx(Lc(v)).epsilon(1e-8));
}

TEST_CASE("linear Hamiltonian has the indicator conjugate") {
  const auto L = legendre(Hamiltonian::linear());
  CHECK(L(0.0) == 0.0);
  CHECK(L(1.0) == 0.0);
  CHECK(std::isinf(L(1.0 + 1e-9)));
  CHECK(L.speed_limit().value() == 1.0);
}

TEST_CASE("table Hamiltonian conjugate") {
  const auto H = Hamiltonian::table({{0, 0}, {1, 0.5}, {2, 2}, {3, 4.5}});
  const auto L = legendre(H);
  for (double v : {0.2, 1.0, 1.7, 2.4}) {
    const double ref = oracle::conjugate([&](double p) { return H(p); }, v, 3.0, 300000);
    CHECK(L(v) == doctest::Approx(ref).epsilon(1e-7));
  }
  CHECK_THROWS_AS(Hamiltonian::table({{1, 0}, {2, 1}}), DomainError);
}

TEST_CASE("Fenchel-Young inequality and equality at the argmax") {
  for (double alpha : {1.25, 2.0, 4.0}) {
    const auto H = Hamiltonian::power(alpha);
    const auto L = legendre(H);
    for (double v = 0.0; v <= 3.0; v += 0.1) {
      for (double p = 0.0; p <= 3.0; p += 0.1) CHECK(H(p) + L(v) >= p * v - 1e-8);
      const double ps = L.argmax(v);
      CHECK(H(ps) + L(v) == doctest::Approx(ps * v).epsilon(1e-8));
    }
  }
}

TEST_CASE("speed bound") {
  const auto L = legendre(Hamiltonian::power(2.0));
  for (double K : {0.5, 1.0, 3.0}) {
    const double V = speed_bound(L, K);
    CHECK(V >= 2.0 * K);
    CHECK(V <= 2.0 * K + 0.01);
  }
  CHECK(speed_bound(legendre(Hamiltonian::linear()), 1.0) == doctest::Approx(1.0).epsilon(1e-2));
  CHECK_THROWS_AS(speed_bound(L, -1.0), DomainError);
}

TEST_CASE("invalid Hamiltonians") {
  CHECK_THROWS_AS(Hamiltonian::power(1.0), DomainError);
  CHECK_THROWS_AS(Hamiltonian::power(2.0)(-1.0), DomainError);
  CHECK_THROWS_AS(legendre(Hamiltonian::custom([](double p) { return p + 1.0; }, "shifted", 10.0)),
                  DomainError);
}
