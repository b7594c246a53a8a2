#include <benchmark/benchmark.h>

#include "hjconvex/convexity.hpp"
#include "hjconvex/hamiltonian.hpp"
#include "hjconvex/hopflax.hpp"
#include "hjconvex/presets.hpp"
#include "hjconvex/spaces/any_space.hpp"
#include "hjconvex/structure.hpp"

using namespace hjc;

namespace {

void BM_LegendreNumeric(benchmark::State& state) {
  const auto H = Hamiltonian::table({{0, 0}, {0.5, 0.125}, {1, 0.5}, {2, 2}, {3, 4.5}});
  const auto L = legendre(H);
  double v = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(L(v));
    v = v < 2.4 ? v + 0.01 : 0.0;
  }
}
BENCHMARK(BM_LegendreNumeric);

void BM_SolveEuclidean2(benchmark::State& state) {
  const EuclideanSpace E(2, 2.0, 1.0 / static_cast<double>(state.range(0)));
  const auto u0 = make_preset(E, {"norm"});
  const auto L = legendre(Hamiltonian::power(2.0));
  const auto pts = E.sample_points();
  for (auto _ : state) benchmark::DoNotOptimize(solve_inf(E, u0, L, 0.5, pts, {1}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_SolveEuclidean2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EikonalLattice(benchmark::State& state) {
  const Lattice2 X(2, {-8, 8, -8, 8});
  const auto u0 = make_preset(X, {"norm"});
  const auto pts = X.sample_points();
  for (auto _ : state) benchmark::DoNotOptimize(solve_eikonal(X, u0, 2.0, HopfLaxMode::inf, pts, {1}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_EikonalLattice)->Unit(benchmark::kMillisecond);

void BM_WeakGeodesicCheck(benchmark::State& state) {
  const EuclideanSpace E(2, 2.0, 0.1);
  const auto pts = E.sample_points();
  const auto f = view_of(make_preset(E, {"norm"}), pts);
  CheckOptions o;
  o.budget = static_cast<std::size_t>(state.range(0));
  o.tau = 1e-9;
  for (auto _ : state) benchmark::DoNotOptimize(check_weak_geodesic(E, f, o));
}
BENCHMARK(BM_WeakGeodesicCheck)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BusemannLattice(benchmark::State& state) {
  const Lattice2 X(1, {-2, 2, -2, 2});
  CheckOptions o;
  o.budget = 2000;
  for (auto _ : state) benchmark::DoNotOptimize(check_busemann3(X, X.sample_points(), o));
}
BENCHMARK(BM_BusemannLattice)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
