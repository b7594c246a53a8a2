// One pass/fail line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "experiments.hpp"
#include "hjconvex/lattice_checks.hpp"
#include "runner.hpp"
#include "suites.hpp"

using namespace hjc;
using namespace hjc::cli;

namespace {

// Pinned tolerances.
constexpr double kFenchelTol = 1e-8;
constexpr double kSolveTol = 1e-9;
constexpr double kAc1RuntimeS = 30.0;
constexpr double kAc2RuntimeS = 5.0;
constexpr double kAc6RuntimeS = 120.0;

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void line(int ac, const std::string& title, const Verdict& v, const std::string& summary) {
  std::cout << "AC" << ac << " " << (v.pass ? "PASS" : "FAIL") << "  " << title << " | " << summary;
  for (const auto& n : v.notes) std::cout << " | " << n;
  std::cout << std::endl;
  if (!v.pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double v) { return format_double(v); }

void all_goldens(const ExperimentResult& r, Verdict& v) {
  for (const auto& g : r.goldens)
    v.require(g.pass(), r.name + ": " + g.name + " expected " + g.relation + " " + num(g.expected) +
                            ", got " + num(g.actual));
}

std::vector<const Golden*> goldens_with_prefix(const std::vector<ExperimentResult>& runs, const std::string& p) {
  std::vector<const Golden*> out;
  for (const auto& r : runs)
    for (const auto& g : r.goldens)
      if (g.name.rfind(p, 0) == 0) out.push_back(&g);
  return out;
}

}  // namespace

int main() {
  const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<ExperimentResult> runs;
  auto find_run = [&](const std::string& n) -> const ExperimentResult& {
    for (const auto& r : runs)
      if (r.name == n) return r;
    throw std::runtime_error("missing run " + n);
  };
  for (const auto& e : experiment_registry()) runs.push_back(run_experiment(e.name, {1, threads}));

  {  // AC1: literal values on the solver output.
    Verdict v;
    const auto cfg = lattice_nonpreservation_config();
    const auto X = std::get<Lattice2>(make_space(cfg.space));
    const auto t0 = std::chrono::steady_clock::now();
    const auto run = run_solve(X, cfg, threads);
    const double secs = seconds_since(t0);
    const auto& q = run.queries[0];
    const double ux = q[0].solution.value, uy = q[1].solution.value;
    const double want[3] = {45.0 / 4.0, 12.0, 20.0};
    v.require(ux == 0.0, "u(x,4) = " + num(ux));
    v.require(uy <= 12.0, "u(y,4) = " + num(uy) + " > 12");
    const auto mids = X.midpoints(q[0].point, q[1].point);
    v.require(mids.size() == 3, "M(x,y) has " + std::to_string(mids.size()) + " points");
    std::string combos;
    for (int k = 0; k < 3; ++k) {
      const double uz = q[2 + k].solution.value;
      v.require(uz == want[k], "u(z,4) at " + point_label(X, q[2 + k].point) + " = " + num(uz) +
                                   ", criterion " + num(want[k]) + " (graph minimizer " +
                                   point_label(X, q[2 + k].solution.witness) + ")");
      const double c = ux + uy - 2.0 * uz;
      v.require(c < -8.0, "combination " + num(c) + " >= -8");
      combos += (k ? ", " : "") + num(c);
    }
    v.require(secs <= kAc1RuntimeS, "runtime " + num(secs) + " s");
    line(1, "lattice counterexample, k=4", v,
         "u(x)=" + num(ux) + " u(y)=" + num(uy) + " u(z)=" + num(q[2].solution.value) + "," +
             num(q[3].solution.value) + "," + num(q[4].solution.value) + " combos " + combos +
             " in " + num(secs) + " s");
  }

  {  // AC2
    Verdict v;
    const auto& r = find_run("halfline-nonpreservation");
    all_goldens(r, v);
    v.require(r.seconds <= kAc2RuntimeS, "runtime " + num(r.seconds) + " s");
    const auto* m = r.find("worst margin t=1");
    line(2, "half-line counterexample", v,
         "weak margin t=1 " + num(m ? m->actual : NAN) + " in " + num(r.seconds) + " s");
  }

  {  // AC3
    Verdict v;
    const auto& r = find_run("cylinder-preservation");
    all_goldens(r, v);
    line(3, "cylinder preservation", v, std::to_string(r.goldens.size()) + " goldens");
  }

  {  // AC4
    Verdict v;
    const auto& r = find_run("busemann-catalog");
    all_goldens(r, v);
    const auto* m = r.find("lattice witness ((0,0),(0,4),(2,4)) margin");
    line(4, "structure catalog", v, "lattice witness margin " + num(m ? m->actual : NAN));
  }

  {  // AC5: literal three-inequality elimination and the patch search.
    Verdict v;
    const auto rep = lattice_rigidity_check(100000, 1, 1e-9);
    std::string ce;
    if (rep.three_counterexample)
      for (auto c : *rep.three_counterexample) ce += (ce.empty() ? "" : ",") + std::to_string(c);
    v.require(rep.three_unique, "three listed inequalities admit (u10,u01,u11) = (" + ce +
                                    "); the four-corner system with u00=0 is unique: " +
                                    (rep.cell_unique_with_anchor ? "yes" : "no"));
    v.require(rep.passing_nonconstant == 0,
              std::to_string(rep.passing_nonconstant) + " nonconstant fields passed");
    line(5, "rigidity", v,
         std::to_string(rep.trials) + " trials, " + std::to_string(rep.passing_nonconstant) +
             " nonconstant passing");
  }

  {  // AC6
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<suites::PreservationRow> rows;
    suites::preservation_all(20, threads, rows);
    const double secs = seconds_since(t0);
    double worst = INFINITY;
    for (const auto& r : rows) {
      worst = std::min(worst, r.margin - r.bound);
      v.require(r.pass(), r.space + " preset " + std::to_string(r.preset) + " t=" + num(r.t) +
                              " margin " + num(r.margin) + " < " + num(r.bound));
    }
    v.require(rows.size() == 240, "ran " + std::to_string(rows.size()) + " cases");
    v.require(secs <= kAc6RuntimeS, "runtime " + num(secs) + " s");
    line(6, "convexity preservation suite", v,
         std::to_string(rows.size()) + " cases, min slack over -5Kh " + num(worst) + " in " + num(secs) + " s");
  }

  {  // AC7
    Verdict v;
    all_goldens(find_run("subharmonic-preservation"), v);
    all_goldens(find_run("cross-pointwise-loss"), v);
    line(7, "subharmonic preservation and pointwise loss", v, "lattice and cross goldens");
  }

  {  // AC8
    Verdict v;
    const auto& r = find_run("alpha-convergence");
    all_goldens(r, v);
    const auto* f = r.find("final gap at alpha=1.05");
    line(8, "alpha convergence", v, "final gap " + num(f ? f->actual : NAN));
  }

  {  // AC9
    Verdict v;
    std::vector<std::string> parts;
    // Fenchel-Young.
    double fy = 0.0;
    std::vector<Hamiltonian> Hs{Hamiltonian::power(1.25), Hamiltonian::power(1.5), Hamiltonian::power(2.0),
                                Hamiltonian::power(3.0), Hamiltonian::table({{0, 0}, {1, 0.5}, {2, 2}, {3, 4.5}})};
    for (const auto& H : Hs) {
      const auto L = legendre(H);
      for (double vv = 0.0; vv <= 2.5; vv += 0.05) {
        const double Lv = L(vv);
        for (double p = 0.0; p <= 3.0; p += 0.05) fy = std::max(fy, p * vv - H(p) - Lv);
      }
    }
    v.require(fy <= kFenchelTol, "Fenchel-Young violation " + num(fy));
    parts.push_back("FY max violation " + num(fy));
    // Lipschitz and DPP goldens of every experiment.
    const auto lip = goldens_with_prefix(runs, "lipschitz");
    for (const auto* g : lip) v.require(g->pass(), g->name + " = " + num(g->actual));
    const auto dpp = goldens_with_prefix(runs, "dpp");
    for (const auto* g : dpp) v.require(g->pass(), g->name + " = " + num(g->actual));
    parts.push_back(std::to_string(lip.size()) + " Lipschitz slices, " + std::to_string(dpp.size()) + " DPP checks");
    // Radius doubling.
    double dbl = 0.0;
    {
      const auto L2 = legendre(Hamiltonian::power(2.0)), L15 = legendre(Hamiltonian::power(1.5));
      const HalfLine X(0.02, 4.0);
      const EuclideanSpace E(2, 2.0, 0.1);
      const Cylinder C(0.1, -1.0, 1.0);
      auto change = [&](const auto& S, const auto& u0, const Lagrangian& L) {
        const auto pts = S.sample_points();
        const auto a = solve_inf(S, u0, L, 0.5, pts, {threads, 1.0});
        const auto b = solve_inf(S, u0, L, 0.5, pts, {threads, 2.0});
        for (std::size_t i = 0; i < a.field.size(); ++i)
          dbl = std::max(dbl, std::abs(a.field.values()[i] - b.field.values()[i]));
      };
      PresetSpec fam{"convex-family"};
      change(X, make_preset(X, fam), L2);
      change(X, make_preset(X, fam), L15);
      change(E, make_preset(E, {"norm"}), L2);
      change(C, make_preset(C, fam), L15);
    }
    for (const auto* g : goldens_with_prefix(runs, "radius doubling")) dbl = std::max(dbl, g->actual);
    v.require(dbl <= kSolveTol, "radius doubling change " + num(dbl));
    parts.push_back("radius doubling " + num(dbl));
    // Midpoint stability on 1e4 quadruples per Busemann space.
    {
      CheckOptions o;
      o.tau = 1e-12;
      o.budget = 10000;
      o.threads = threads;
      std::size_t tested = 0;
      auto run = [&](const auto& S, const std::string& label) {
        const auto r = check_midpoint_stability(S, S.sample_points(), o);
        tested += r.tested;
        v.require(r.pass && r.tested == 10000, "midpoint stability on " + label + " margin " + num(r.worst_margin));
      };
      for (double p : {1.5, 2.0, 3.0}) run(EuclideanSpace(2, p, 0.25), "euclidean p=" + num(p));
      run(MetricTree::star(3, 1.0, 0.125), "star3");
      run(HalfLine(0.1, 4.0), "halfline");
      parts.push_back("midpoint stability " + std::to_string(tested) + " quadruples");
    }
    // Residuals: half-line (from its experiment) and |x| with H = p^2/2.
    {
      const auto res = goldens_with_prefix(runs, "residual");
      for (const auto* g : res) v.require(g->pass(), g->name + " = " + num(g->actual));
      const double h = 0.01, dt = 0.1;
      const EuclideanSpace E(1, 2.0, h, -5.0, 5.0);
      const auto u0 = make_preset(E, {"norm"});
      const auto L = legendre(Hamiltonian::power(2.0));
      const auto pts = E.sample_points();
      const auto a = solve_inf(E, u0, L, 1.0, pts, {threads});
      const auto b = solve_inf(E, u0, L, 1.0 + dt, pts, {threads});
      std::vector<double> xs;
      for (const auto& p : a.field.points()) xs.push_back(p[0]);
      const auto r = residual_check(xs, a.field.values(), b.field.values(), dt, Hamiltonian::power(2.0), 1.0, 1e-6);
      v.require(r.max_residual <= 10.0 * (h / dt + dt), "|x| residual " + num(r.max_residual));
      parts.push_back("residuals " + num(res.empty() ? NAN : res.front()->actual) + ", " + num(r.max_residual));
    }
    // Determinism: every experiment rerun single-threaded.
    {
      std::size_t same = 0;
      for (const auto& r8 : runs) {
        const auto r1 = run_experiment(r8.name, {1, 1});
        bool eqv = r1.goldens.size() == r8.goldens.size() && r1.tables.size() == r8.tables.size();
        for (std::size_t i = 0; eqv && i < r1.goldens.size(); ++i)
          eqv = r1.goldens[i].actual == r8.goldens[i].actual;
        for (std::size_t i = 0; eqv && i < r1.tables.size(); ++i) eqv = r1.tables[i].rows == r8.tables[i].rows;
        v.require(eqv, r8.name + " differs between 1 and " + std::to_string(threads) + " threads");
        same += eqv;
      }
      parts.push_back(std::to_string(same) + " experiments thread-independent");
    }
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
    line(9, "invariant suites", v, s);
  }

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
