#include "experiments.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hjconvex/lattice_checks.hpp"
#include "runner.hpp"

namespace hjc::cli {

bool Golden::pass() const {
  if (relation == "==") return std::abs(actual - expected) <= tol;
  if (relation == "<=") return actual <= expected + tol;
  if (relation == "<") return actual < expected;
  if (relation == ">=") return actual >= expected - tol;
  return actual == 1.0;  // holds
}

bool ExperimentResult::pass() const {
  for (const auto& g : goldens)
    if (!g.pass()) return false;
  return true;
}

const Golden* ExperimentResult::find(const std::string& golden) const {
  for (const auto& g : goldens)
    if (g.name == golden) return &g;
  return nullptr;
}

namespace {

constexpr double kPi = std::numbers::pi;

Golden eq(std::string name, std::string tag, double expected, double actual, double tol,
          std::string note = "") {
  return {std::move(name), std::move(tag), "==", expected, actual, tol, std::move(note)};
}
Golden le(std::string name, std::string tag, double bound, double actual, double tol = 0.0) {
  return {std::move(name), std::move(tag), "<=", bound, actual, tol, ""};
}
Golden lt(std::string name, std::string tag, double bound, double actual) {
  return {std::move(name), std::move(tag), "<", bound, actual, 0.0, ""};
}
Golden ge(std::string name, std::string tag, double bound, double actual, double tol = 0.0) {
  return {std::move(name), std::move(tag), ">=", bound, actual, tol, ""};
}
Golden holds(std::string name, std::string tag, bool ok, std::string note = "") {
  return {std::move(name), std::move(tag), "holds", 1.0, ok ? 1.0 : 0.0, 0.0, std::move(note)};
}

std::string tlabel(double t) { return "t=" + format_double(t); }

template <GeodesicSpace S>
Golden lipschitz_golden(const S& space, const ScalarField<typename S::Point>& f, double K,
                        const std::string& label, const ExperimentContext& ctx) {
  CheckOptions opt;
  opt.seed = ctx.seed;
  opt.threads = ctx.threads;
  opt.budget = 2000;
  const auto r = lipschitz_estimate(space, view_of(f), opt);
  const double est = r.details["estimate"].template get<double>();
  return le("lipschitz " + label + " <= K + 5h", "published", K + 5.0 * space.resolution(), est);
}

CheckOptions options(const ExperimentContext& ctx, double tau, std::size_t budget = 4000) {
  CheckOptions o;
  o.tau = tau;
  o.budget = budget;
  o.seed = ctx.seed;
  o.threads = ctx.threads;
  return o;
}

// ---------------------------------------------------------------------------

ExperimentResult halfline_nonpreservation(const ExperimentContext& ctx) {
  ExperimentResult r;
  const double h = 0.01;
  const HalfLine X(h, 10.0);
  const auto u0 = make_preset(X, {"neg-x"});
  const auto samples = X.sample_points();
  nlohmann::json checks = nlohmann::json::array();
  for (double t : {0.0, 0.5, 1.0}) {
    const auto sol = solve_eikonal(X, u0, t, HopfLaxMode::sup, samples, {ctx.threads});
    double err = 0.0;
    for (std::size_t i = 0; i < sol.field.size(); ++i)
      err = std::max(err, std::abs(sol.field.values()[i] -
                                   std::min(t - sol.field.points()[i].x, 0.0)));
    r.goldens.push_back(eq("max |u - min(t-x,0)| " + tlabel(t), "published", 0.0, err, h));
    FieldView<HalfLinePoint> f{samples, eikonal_evaluator(X, u0, t, HopfLaxMode::sup), 1.0};
    f = memoize(f);
    std::vector<std::pair<HalfLinePoint, HalfLinePoint>> named;
    if (t > 0.0) named.push_back({HalfLinePoint{std::max(0.0, t - 0.5)}, HalfLinePoint{t + 0.5}});
    const auto rep = check_weak_geodesic(X, f, options(ctx, 1e-9), false, named);
    checks.push_back(to_json(X, rep));
    if (t == 0.0) {
      r.goldens.push_back(holds("weak convexity holds " + tlabel(t), "published", rep.pass));
    } else {
      r.goldens.push_back(holds("weak convexity fails " + tlabel(t), "published", !rep.pass));
      r.goldens.push_back(le("worst margin " + tlabel(t), "published", -std::min(h, 0.1), rep.worst_margin));
      const double a = rep.witness[0].x, b = rep.witness[1].x;
      r.goldens.push_back(holds("witness straddles x=t " + tlabel(t), "published",
                                std::min(a, b) < t && t < std::max(a, b)));
      r.goldens.push_back(lipschitz_golden(X, sol.field, 1.0, tlabel(t), ctx));
    }
    if (t == 1.0) r.tables.push_back(field_table(X, sol, "solution_t=1.csv"));
  }
  const auto dpp = dpp_check(X, u0, legendre(Hamiltonian::linear()), 1.0, 0.5, HopfLaxMode::sup,
                             samples, true, ctx.threads);
  r.goldens.push_back(le("dpp discrepancy s=0.5 t=1", "oracle", 2.0 * h, dpp.max_discrepancy));
  // Residual of u_t - |u_x| = 0 between t = 1 and t = 1 + dt.
  const double dt = 0.1;
  const auto a = solve_eikonal(X, u0, 1.0, HopfLaxMode::sup, samples, {ctx.threads});
  const auto b = solve_eikonal(X, u0, 1.0 + dt, HopfLaxMode::sup, samples, {ctx.threads});
  std::vector<double> xs;
  for (const auto& p : samples) xs.push_back(p.x);
  const auto res = residual_check(xs, a.field.values(), b.field.values(), dt,
                                  Hamiltonian::linear(), -1.0, 1e-6);
  r.goldens.push_back(le("residual off kinks t=1 dt=0.1", "oracle", 10.0 * (h / dt + dt),
                         res.max_residual));
  r.report["checks"] = checks;
  r.report["residual"] = {{"max", res.max_residual}, {"tested", res.tested}, {"skipped", res.skipped}};
  return r;
}

// ---------------------------------------------------------------------------

}  // namespace

RunConfig lattice_nonpreservation_config() {
  RunConfig cfg;
  cfg.source = "lattice-nonpreservation";
  cfg.space.kind = "lattice";
  cfg.space.lattice_level = 2;
  cfg.space.h = 0.25;
  cfg.space.box = {-20, 20, -20, 20};
  cfg.space.l1_radius = 20;
  cfg.hamiltonian = HamiltonianConfig{};
  cfg.hamiltonian->kind = "linear";
  cfg.initial.preset.name = "quadrant-product";
  cfg.initial.preset.radius = 20.0;
  cfg.times = {4.0};
  cfg.mode = HopfLaxMode::inf;
  cfg.queries = {{"5", "4"}, {"4", "12"}, {"4", "15/2"}, {"9/2", "8"}, {"5", "17/2"}};
  return cfg;
}

namespace {

ExperimentResult lattice_nonpreservation(const ExperimentContext& ctx) {
  ExperimentResult r;
  const auto cfg = lattice_nonpreservation_config();
  const Lattice2 X = std::get<Lattice2>(make_space(cfg.space));
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = run_solve(X, cfg, ctx.threads);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto& q = run.queries[0];
  const LatticePoint x = q[0].point, y = q[1].point;
  const double ux = q[0].solution.value, uy = q[1].solution.value;
  const auto mids = X.midpoints(x, y);
  const std::vector<LatticePoint> expected_mids{q[2].point, q[3].point, q[4].point};
  r.goldens.push_back(holds("M(x,y) = {(4,15/2), (9/2,8), (5,17/2)}", "published", mids == expected_mids));
  r.goldens.push_back(eq("u(x,4) at x=(5,4)", "published", 0.0, ux, 0.0));
  r.goldens.push_back(eq("u(y,4) at y=(4,12)", "oracle", 12.0, uy, 0.0));
  r.goldens.push_back(le("u(y,4) <= u0((0,12)) = 12", "published", 12.0, uy));
  r.goldens.push_back(eq("u(z,4) at z=(4,15/2)", "oracle", 21.0 / 2.0, q[2].solution.value, 0.0,
                         "closed form 3k-3/4 = 45/4 is not attained on the graph; minimizer (1/2,7)"));
  r.goldens.push_back(eq("u(z,4) at z=(9/2,8)", "published", 12.0, q[3].solution.value, 0.0));
  r.goldens.push_back(eq("u(z,4) at z=(5,17/2)", "published", 20.0, q[4].solution.value, 0.0));
  nlohmann::json combos = nlohmann::json::array();
  for (std::size_t k = 2; k < 5; ++k) {
    const double c = ux + uy - 2.0 * q[k].solution.value;
    r.goldens.push_back(lt("u(x)+u(y)-2u(z) < -8 at z=" + point_label(X, q[k].point), "published",
                           -8.0, c));
    combos.push_back({{"z", point_json(X, q[k].point)}, {"value", c}});
  }
  // The solution fails 1-weak convexity at (x, y); the pair is admissible.
  CheckOptions opt = options(ctx, 0.0, 1);
  const auto& field = run.slices[0].field;
  FieldView<LatticePoint> u{{x, y}, [&](const LatticePoint& p) {
                              if (auto v = field.find(p)) return *v;
                              return eikonal_at(X, resolve_initial(X, cfg.initial), 4.0,
                                                HopfLaxMode::inf, p).value;
                            },
                            std::nullopt};
  const auto one = check_one_weak_lattice(X, u, opt, false, {{x, y}});
  r.goldens.push_back(holds("u(.,4) fails 1-weak convexity at (x,y)", "published", !one.pass));
  // u0 is 1-weakly convex over vertex pairs (all 4950 pairs of a 10x10 patch),
  // but not over all graph points: ((-1/2,3),(1/2,0)) has the single
  // midpoint (0,3/2), where u0 = 3/2.
  const Lattice2 patch(0, {-3, 6, -3, 6});
  const auto u0 = make_preset(patch, cfg.initial.preset);
  const auto one0 = check_one_weak_lattice(patch, view_of(u0, patch.sample_points()),
                                           options(ctx, 0.0, 1000000));
  r.goldens.push_back(holds("u0 1-weakly convex on vertex pairs of [-3,6]^2", "oracle",
                            one0.pass && one0.tested == 4950));
  const LatticePoint ex{Dyadic::parse("-1/2"), Dyadic(3)}, ey{Dyadic::parse("1/2"), Dyadic(0)};
  const auto emids = X.midpoints(ex, ey);
  const bool unique_mid = emids.size() == 1 && emids[0] == LatticePoint{Dyadic(0), Dyadic::parse("3/2")};
  r.goldens.push_back(holds("M((-1/2,3),(1/2,0)) = {(0,3/2)}", "oracle", unique_mid));
  const double em = u0(ex) + u0(ey) - 2.0 * u0(LatticePoint{Dyadic(0), Dyadic::parse("3/2")});
  r.goldens.push_back(eq("u0 1-weak margin at ((-1/2,3),(1/2,0))", "oracle", -3.0, em, 0.0,
                         "stated 1-weak convexity of u0 fails at edge points"));
  // The jump of u0 across x1 = 0 moves to x1 = t.
  const auto init = resolve_initial(X, cfg.initial);
  const double below = eikonal_at(X, init, 4.0, HopfLaxMode::inf, {Dyadic::parse("15/4"), Dyadic(16)}).value;
  const double at = eikonal_at(X, init, 4.0, HopfLaxMode::inf, {Dyadic(4), Dyadic(16)}).value;
  r.goldens.push_back(eq("u(.,4) jump between (15/4,16) and (4,16)", "oracle", 16.0, at - below, 0.0,
                         "u0 is discontinuous, so no Lipschitz bound applies"));
  const auto dpp = dpp_check(X, resolve_initial(X, cfg.initial), legendre(Hamiltonian::linear()),
                             4.0, 2.0, HopfLaxMode::inf, X.sample_points(), true, ctx.threads);
  r.goldens.push_back(eq("dpp discrepancy s=2 t=4", "oracle", 0.0, dpp.max_discrepancy, 0.0));
  r.report["solve"] = solve_json(X, cfg, run);
  r.report["combinations"] = combos;
  r.report["one_weak_solution"] = to_json(X, one);
  r.report["one_weak_initial"] = to_json(X, one0);
  r.report["solve_seconds"] = secs;
  r.tables.push_back(field_table(X, run.slices[0], "solution_t=4.csv"));
  return r;
}


// ---------------------------------------------------------------------------

ExperimentResult cylinder_preservation(const ExperimentContext& ctx) {
  ExperimentResult r;
  const double h = 0.125;
  const Cylinder X(h, -1.0, 1.0);
  const auto u0 = make_preset(X, {"height"});
  const auto samples = X.sample_points();
  const CylinderPoint o{0.0, 0.0}, a{kPi, 0.0};
  const auto mids = X.midpoints(o, a);
  const bool mids_ok = mids.size() == 2 && std::abs(mids[0].theta - kPi / 2) < 1e-12 &&
                       std::abs(mids[1].theta - 3 * kPi / 2) < 1e-12 && mids[0].height == 0.0 &&
                       mids[1].height == 0.0;
  r.goldens.push_back(holds("M((0,0),(pi,0)) = {(pi/2,0),(3pi/2,0)}", "published", mids_ok));
  r.goldens.push_back(eq("d((0,0),(pi,0))", "published", kPi, X.distance(o, a), 1e-12));
  const auto g1 = geodesic_point(X, o, a, 0.5, 1);
  r.goldens.push_back(eq("geodesic_point branch 1 theta", "published", 3 * kPi / 2, g1.theta, 1e-12));
  nlohmann::json checks = nlohmann::json::array();
  for (double t : {0.5, 1.0, 2.0}) {
    const auto sol = solve_eikonal(X, u0, t, HopfLaxMode::inf, samples, {ctx.threads});
    double err = 0.0;
    for (std::size_t i = 0; i < sol.field.size(); ++i)
      err = std::max(err, std::abs(sol.field.values()[i] - (sol.field.points()[i].height - t)));
    r.goldens.push_back(eq("max |u - (x3 - t)| " + tlabel(t), "published", 0.0, err, 1e-9));
    auto f = memoize(FieldView<CylinderPoint>{samples, eikonal_evaluator(X, u0, t, HopfLaxMode::inf), 1.0});
    const auto rep = check_weak_geodesic(X, f, options(ctx, 1e-9), false, {{o, a}});
    checks.push_back(to_json(X, rep));
    r.goldens.push_back(holds("weak convexity holds " + tlabel(t), "published", rep.pass));
    r.goldens.push_back(lipschitz_golden(X, sol.field, 1.0, tlabel(t), ctx));
    if (t == 1.0) r.tables.push_back(field_table(X, sol, "solution_t=1.csv"));
  }
  const auto dpp = dpp_check(X, u0, legendre(Hamiltonian::linear()), 2.0, 1.0, HopfLaxMode::inf,
                             samples, true, ctx.threads);
  r.goldens.push_back(le("dpp discrepancy s=1 t=2", "oracle", 2.0 * h, dpp.max_discrepancy));
  r.report["checks"] = checks;
  return r;
}

// ---------------------------------------------------------------------------

struct CatalogRow {
  std::string space, condition, verdict;
  double margin;
};

template <GeodesicSpace S>
void catalog_entry(ExperimentResult& r, std::vector<CatalogRow>& rows, const S& space,
                   const std::string& label, bool expect_pass, const std::vector<typename S::Point>& B,
                   const ExperimentContext& ctx, double tau) {
  const auto opt = options(ctx, tau);
  const auto b3 = check_busemann3(space, space.sample_points(), opt);
  rows.push_back({label, "busemann3", b3.pass ? "PASS" : "FAIL", b3.worst_margin});
  r.goldens.push_back(holds("busemann3 " + std::string(expect_pass ? "passes" : "fails") + " on " + label,
                            "published", b3.pass == expect_pass));
  const auto b4 = check_busemann4(space, space.sample_points(), opt);
  rows.push_back({label, "busemann4", b4.pass ? "PASS" : "FAIL", b4.worst_margin});
  const auto eq34 = check_equivalence_3_4(space, B, opt);
  rows.push_back({label, "equivalence", eq34.agree ? "AGREE" : "DISAGREE",
                  std::min(eq34.three.worst_margin, eq34.four.worst_margin)});
  r.goldens.push_back(holds("3-point and 4-point verdicts agree on " + label, "published", eq34.agree));
  r.report["spaces"][label] = {{"busemann3", to_json(space, b3)},
                               {"busemann4", to_json(space, b4)},
                               {"equivalence",
                                {{"three", to_json(space, eq34.three)},
                                 {"four", to_json(space, eq34.four)},
                                 {"agree", eq34.agree}}}};
}

ExperimentResult busemann_catalog(const ExperimentContext& ctx) {
  ExperimentResult r;
  std::vector<CatalogRow> rows;
  for (double p : {1.5, 2.0, 3.0}) {
    const EuclideanSpace E(2, p, 0.25, -1.0, 1.0);
    std::vector<EuclideanPoint> B;
    for (double a : {-1.0, 0.0, 1.0})
      for (double b : {-1.0, 0.0, 1.0}) B.push_back(E.make({a, b}));
    catalog_entry(r, rows, E, "euclidean p=" + format_double(p), true, B, ctx, 1e-12);
  }
  {
    const auto T = MetricTree::star(3, 1.0, 0.25);
    std::vector<TreePoint> B{T.vertex(0), T.vertex(1), T.vertex(2), T.vertex(3),
                             T.make(0, 0.5), T.make(1, 0.5), T.make(2, 0.5)};
    catalog_entry(r, rows, T, "star3", true, B, ctx, 1e-12);
  }
  {
    const HalfLine X(0.5, 4.0);
    std::vector<HalfLinePoint> B;
    for (double x : {0.0, 1.0, 2.0, 3.0, 4.0}) B.push_back({x});
    catalog_entry(r, rows, X, "halfline", true, B, ctx, 1e-12);
  }
  {
    const Lattice2 L(1, {-2, 2, -2, 2});
    std::vector<LatticePoint> B;
    for (std::int64_t i = 0; i <= 4; ++i)
      for (std::int64_t j = 0; j <= 4; ++j) B.push_back({i, j});
    catalog_entry(r, rows, L, "lattice", false, B, ctx, 0.0);
    const auto b3 = check_busemann3(L, L.sample_points(), options(ctx, 0.0));
    const double named = b3.details["named"][1]["margin"].get<double>();
    r.goldens.push_back(eq("lattice witness ((0,0),(0,4),(2,4)) margin", "published", -4.0, named, 0.0,
                           "midpoints z=(0,2), z'=(2,1): 2 d(z,z') = 6 > d(y,y') = 2"));
    const Lattice2 fine(3, {-1, 2, -1, 2});
    std::vector<LatticePoint> centers;
    for (const auto& p : fine.sample_points())
      if (p.x1 >= Dyadic(0) && p.x1 <= Dyadic(1) && p.x2 >= Dyadic(0) && p.x2 <= Dyadic(1))
        centers.push_back(p);
    const auto npc = check_uniform_npc(fine, 1.0 / 3.0, centers, options(ctx, 0.0, 20000));
    rows.push_back({"lattice", "uniform-npc delta=1/3", npc.pass ? "PASS" : "FAIL", npc.worst_margin});
    r.goldens.push_back(holds("uniform NPC on lattice at delta=1/3", "published", npc.pass));
    const auto big = check_uniform_npc(L, 3.0, {LatticePoint{0, 1}}, options(ctx, 0.0, 20000));
    rows.push_back({"lattice", "uniform-npc delta=3", big.pass ? "PASS" : "FAIL", big.worst_margin});
    r.goldens.push_back(holds("uniform NPC fails on lattice at delta=3", "oracle", !big.pass));
    r.report["lattice_npc"] = {{"delta_1_3", to_json(fine, npc)}, {"delta_3", to_json(L, big)}};
  }
  {
    const Cylinder C(0.1, -1.0, 1.0);
    std::vector<CylinderPoint> B{{0.0, 0.0}, {kPi / 2, 0.0}, {kPi, 0.0}, {3 * kPi / 2, 0.0},
                                 {0.0, 1.0}, {kPi, 1.0}};
    catalog_entry(r, rows, C, "cylinder", false, B, ctx, 1e-12);
    const std::vector<CylinderPoint> centers{C.make(0.0, 0.0), C.make(kPi, 0.5), C.make(2.0, -0.3)};
    const auto npc = check_uniform_npc(C, kPi / 4, centers, options(ctx, 1e-12, 20000));
    rows.push_back({"cylinder", "uniform-npc delta=pi/4", npc.pass ? "PASS" : "FAIL", npc.worst_margin});
    r.goldens.push_back(holds("uniform NPC on cylinder at delta=pi/4", "published", npc.pass));
    r.goldens.push_back(le("cylinder max |margin| at delta=pi/4 (equality)", "published", 1e-12,
                           npc.details["max_abs_margin"].get<double>()));
    r.report["cylinder_npc"] = to_json(C, npc);
  }
  CsvTable t;
  t.file = "catalog.csv";
  t.header = {"space", "condition", "verdict", "worst_margin"};
  for (const auto& row : rows)
    t.rows.push_back({row.space, row.condition, row.verdict,
                      std::isfinite(row.margin) ? format_double(row.margin) : ""});
  r.tables.push_back(t);
  return r;
}

// ---------------------------------------------------------------------------

std::string inequality_list(const std::vector<LinearInequality>& v) {
  std::string s;
  for (const auto& q : v) s += (s.empty() ? "" : "; ") + q.text;
  return s;
}

ExperimentResult lattice_rigidity(const ExperimentContext& ctx) {
  ExperimentResult r;
  const auto rep = lattice_rigidity_check(100000, ctx.seed, 1e-9);
  std::string ce;
  if (rep.three_counterexample) {
    const auto& c = *rep.three_counterexample;
    ce = "(u10,u01,u11) = (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
         std::to_string(c[2]) + ")";
  }
  r.goldens.push_back(holds("three listed limit inequalities alone admit a nonzero solution", "oracle",
                            !rep.three_unique && rep.three_counterexample.has_value(), ce));
  r.goldens.push_back(holds("four corner inequalities with u(0,0)=0 force u=0", "oracle",
                            rep.cell_unique_with_anchor));
  r.goldens.push_back(holds("corner system solutions are exactly the constants", "oracle",
                            rep.cell_unique_up_to_constants));
  r.goldens.push_back(eq("nonconstant passing fields in 1e5 trials", "published", 0.0,
                         static_cast<double>(rep.passing_nonconstant), 0.0));
  r.goldens.push_back(ge("passing fields (constants pass)", "identity", 20000.0,
                         static_cast<double>(rep.passing)));
  // A field with u(1,0) = eps violates the first limit inequality by 2 eps.
  const double e = 1e-3;
  const double viol = 0.0 - 2.0 * e;  // u11 - 2 u10 with u11 = 0
  r.goldens.push_back(le("u(1,0)=eps violates a limit inequality by >= eps", "oracle", -e, viol));
  r.report = {{"three_inequalities", inequality_list(rep.three)},
              {"cell_inequalities", inequality_list(rep.cell)},
              {"three_unique", rep.three_unique},
              {"three_counterexample", ce},
              {"cell_unique_with_anchor", rep.cell_unique_with_anchor},
              {"trials", rep.trials},
              {"passing", rep.passing},
              {"passing_nonconstant", rep.passing_nonconstant},
              {"max_passing_spread", rep.max_passing_spread}};
  return r;
}

// ---------------------------------------------------------------------------

template <GeodesicSpace S>
double radius_doubling_change(const S& space, const InitialDatum<typename S::Point>& u0,
                              const Lagrangian& L, double t, HopfLaxMode mode,
                              const std::vector<typename S::Point>& pts, unsigned threads) {
  const auto a = solve_hopf_lax(space, u0, L, t, mode, pts, {threads, 1.0});
  const auto b = solve_hopf_lax(space, u0, L, t, mode, pts, {threads, 2.0});
  double d = 0.0;
  for (std::size_t i = 0; i < a.field.size(); ++i)
    d = std::max(d, std::abs(a.field.values()[i] - b.field.values()[i]));
  return d;
}

ExperimentResult npc_preservation_tree(const ExperimentContext& ctx) {
  ExperimentResult r;
  const double h = 0.125;
  const auto T = MetricTree::star(3, 1.0, h);
  const auto u0 = make_preset(T, {"distance-to-center"});
  const auto L = legendre(Hamiltonian::power(2.0));
  const auto samples = T.sample_points();
  const auto root = T.vertex(0);
  const double K = 1.0;
  nlohmann::json checks = nlohmann::json::array();
  const auto l2g = check_local_to_global(T, view_of(u0, samples), 0.5, options(ctx, 1e-9));
  r.goldens.push_back(holds("u0 local (delta=0.5) to doubled scale", "oracle", l2g.pass));
  for (double t : {0.25, 0.5, 1.0}) {
    const auto sol = solve_inf(T, u0, L, t, samples, {ctx.threads});
    double err = 0.0;
    for (std::size_t i = 0; i < sol.field.size(); ++i) {
      const double d = T.distance(root, sol.field.points()[i]);
      const double exact = d >= t ? d - t / 2 : d * d / (2 * t);
      err = std::max(err, std::abs(sol.field.values()[i] - exact));
    }
    r.goldens.push_back(eq("max |u - closed form| " + tlabel(t), "oracle", 0.0, err, 1e-9));
    auto f = memoize(FieldView<TreePoint>{samples, hopf_lax_evaluator(T, u0, L, t, HopfLaxMode::inf), K});
    const auto rep = check_weak_geodesic(T, f, options(ctx, 5.0 * K * h));
    checks.push_back(to_json(T, rep));
    r.goldens.push_back(ge("weak convexity margin " + tlabel(t), "published", -5.0 * K * h, rep.worst_margin));
    r.goldens.push_back(lipschitz_golden(T, sol.field, K, tlabel(t), ctx));
    r.goldens.push_back(le("radius doubling change " + tlabel(t), "identity", 1e-9,
                           radius_doubling_change(T, u0, L, t, HopfLaxMode::inf, samples, ctx.threads)));
    if (t == 1.0) r.tables.push_back(field_table(T, sol, "solution_t=1.csv"));
  }
  const auto dpp = dpp_check(T, u0, L, 1.0, 0.5, HopfLaxMode::inf, samples, false, ctx.threads);
  r.goldens.push_back(le("dpp discrepancy s=0.5 t=1", "oracle", 2.0 * h, dpp.max_discrepancy));
  r.report["checks"] = checks;
  r.report["local_to_global"] = {{"local", to_json(T, l2g.local)}, {"doubled", to_json(T, l2g.doubled)}};
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult subharmonic_preservation(const ExperimentContext& ctx) {
  ExperimentResult r;
  const Lattice2 X(2, {-3, 3, -3, 3});
  const auto u0 = make_preset(X, {"norm"});
  const auto samples = X.sample_points();
  const std::vector<double> r_grid{0.25, 0.5, 0.75, 1.0};
  nlohmann::json checks = nlohmann::json::array();
  for (double t : {0.0, 1.0, 2.0}) {
    const auto sol = solve_eikonal(X, u0, t, HopfLaxMode::sup, samples, {ctx.threads});
    double err = 0.0;
    for (std::size_t i = 0; i < sol.field.size(); ++i) {
      const auto& p = sol.field.points()[i];
      err = std::max(err, std::abs(sol.field.values()[i] - ((p.x1.abs() + p.x2.abs()).to_double() + t)));
    }
    r.goldens.push_back(eq("u = |x|_1 + t " + tlabel(t), "oracle", 0.0, err, 0.0));
    auto f = memoize(FieldView<LatticePoint>{samples, eikonal_evaluator(X, u0, t, HopfLaxMode::sup), 1.0});
    const auto sub = check_infty_subharmonious(X, f, 1.0, r_grid, SubharmoniousMode::uniform, options(ctx, 0.0));
    const auto pw = check_pointwise(X, f, {0.25, 0.5}, options(ctx, 0.0));
    checks.push_back(to_json(X, sub));
    checks.push_back(to_json(X, pw));
    r.goldens.push_back(holds("uniformly infinity-subharmonious (delta=1) " + tlabel(t), "published", sub.pass));
    r.goldens.push_back(ge("subharmonious worst margin " + tlabel(t), "published", 0.0, sub.worst_margin));
    r.goldens.push_back(holds("pointwise convex " + tlabel(t), "published", pw.pass));
    if (t > 0.0) r.goldens.push_back(lipschitz_golden(X, sol.field, 1.0, tlabel(t), ctx));
  }
  const auto dpp = dpp_check(X, u0, legendre(Hamiltonian::linear()), 2.0, 1.0, HopfLaxMode::sup,
                             samples, true, ctx.threads);
  r.goldens.push_back(eq("dpp discrepancy s=1 t=2", "oracle", 0.0, dpp.max_discrepancy, 0.0));
  r.report["checks"] = checks;
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult cross_pointwise_loss(const ExperimentContext& ctx) {
  ExperimentResult r;
  const double h = 0.125, t = 1.0;
  const auto X = MetricTree::cross(4.0, h, 2.0);
  const auto u0 = make_preset(X, {"cross-example"});
  const auto samples = X.sample_points();
  const std::vector<double> r_grid{h, 2 * h, 4 * h};
  std::size_t interior = 0;
  for (const auto& z : samples) interior += geodesic_interior(X, z, r_grid) ? 1 : 0;
  r.goldens.push_back(eq("geodesically interior samples", "published", static_cast<double>(samples.size()),
                         static_cast<double>(interior), 0.0));
  const auto f0 = view_of(u0, samples);
  const auto pw0 = check_pointwise(X, f0, r_grid, options(ctx, 1e-9));
  r.goldens.push_back(holds("u0 pointwise convex", "published", pw0.pass));
  const auto sub0 = check_infty_subharmonious(X, f0, 4 * h, r_grid, SubharmoniousMode::uniform,
                                              options(ctx, 1e-9));
  r.goldens.push_back(holds("u0 not infinity-subharmonious", "published", !sub0.pass));
  r.goldens.push_back(eq("u0 subharmonious margin at the origin, r=4h", "published", -4 * h,
                         sub0.worst_margin, 1e-12));
  r.goldens.push_back(holds("worst subharmonious point is the origin", "published",
                            !sub0.witness.empty() && X.as_vertex(sub0.witness[0]) == 0));
  const auto sol = solve_eikonal(X, u0, t, HopfLaxMode::sup, samples, {ctx.threads});
  double err = 0.0;
  for (std::size_t i = 0; i < sol.field.size(); ++i) {
    const auto [x1, x2] = X.cross_coordinates(sol.field.points()[i]);
    (void)x2;
    err = std::max(err, std::abs(sol.field.values()[i] - std::min(t - x1, 0.0)));
  }
  r.goldens.push_back(eq("max |u - min(t - x1, 0)| t=1", "published", 0.0, err, 1e-12));
  auto f = memoize(FieldView<TreePoint>{samples, eikonal_evaluator(X, u0, t, HopfLaxMode::sup), 1.0});
  const auto pw = check_pointwise(X, f, r_grid, options(ctx, 1e-9));
  r.goldens.push_back(holds("u(.,1) not pointwise convex", "published", !pw.pass));
  const std::string target = point_label(X, X.make(2, t));
  bool hit = false;
  for (const auto& s : pw.details["failing_points"]) hit = hit || s.get<std::string>() == target;
  r.goldens.push_back(holds("pointwise convexity fails at (t,0)", "published", hit, target));
  const auto dpp = dpp_check(X, u0, legendre(Hamiltonian::linear()), 1.0, 0.5, HopfLaxMode::sup,
                             samples, true, ctx.threads);
  r.goldens.push_back(le("dpp discrepancy s=0.5 t=1", "oracle", 2.0 * h, dpp.max_discrepancy));
  r.goldens.push_back(lipschitz_golden(X, sol.field, 1.0, "t=1", ctx));
  r.report["pointwise_initial"] = to_json(X, pw0);
  r.report["pointwise_solution"] = to_json(X, pw);
  r.report["subharmonious_initial"] = to_json(X, sub0);
  r.tables.push_back(field_table(X, sol, "solution_t=1.csv"));
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult alpha_convergence(const ExperimentContext& ctx) {
  ExperimentResult r;
  const double h = 0.01, t = 1.0;
  const HalfLine X(h, 10.0);
  const auto u0 = make_preset(X, {"neg-x"});
  const std::vector<double> alphas{2.0, 1.5, 1.2, 1.05};
  const auto gaps = alpha_family(X, u0, alphas, t, X.sample_points(), 2.0 * h, ctx.threads);
  CsvTable tab;
  tab.file = "alpha.csv";
  tab.header = {"space", "alpha", "max_gap", "min_gap", "lower_bound", "upper_bound", "V_alpha"};
  nlohmann::json jg = nlohmann::json::array();
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const auto& g = gaps[i];
    const std::string a = "alpha=" + format_double(g.alpha);
    r.goldens.push_back(holds("gap within two-sided bound " + a, "published", g.within_bounds));
    r.goldens.push_back(eq("gap equals (alpha-1)t/alpha " + a, "oracle", (g.alpha - 1) * t / g.alpha,
                           g.max_gap, 1e-9));
    if (i > 0)
      r.goldens.push_back(lt("gap decreases " + a, "published", gaps[i - 1].max_gap, g.max_gap));
    tab.rows.push_back({"halfline", format_double(g.alpha), format_double(g.max_gap),
                        format_double(g.min_gap), format_double(g.lower_bound),
                        format_double(g.upper_bound), format_double(g.speed)});
    jg.push_back({{"alpha", g.alpha}, {"max_gap", g.max_gap}, {"min_gap", g.min_gap},
                  {"upper_bound", g.upper_bound}, {"lower_bound", g.lower_bound}, {"speed", g.speed}});
  }
  r.goldens.push_back(le("final gap at alpha=1.05", "published", 0.06 + 2.0 * h, gaps.back().max_gap));
  // Same family for |x| on the line.
  const EuclideanSpace E(1, 2.0, h, -5.0, 5.0);
  const auto v0 = make_preset(E, {"norm"});
  const auto egaps = alpha_family(E, v0, {2.0, 1.5, 1.1}, t, E.sample_points(), 2.0 * h, ctx.threads);
  nlohmann::json je = nlohmann::json::array();
  for (std::size_t i = 0; i < egaps.size(); ++i) {
    const auto& g = egaps[i];
    const double sup_gap = std::max(std::abs(g.max_gap), std::abs(g.min_gap));
    if (i > 0) {
      const double prev = std::max(std::abs(egaps[i - 1].max_gap), std::abs(egaps[i - 1].min_gap));
      r.goldens.push_back(lt("|x| gap decreases alpha=" + format_double(g.alpha), "oracle", prev, sup_gap));
    }
    r.goldens.push_back(holds("|x| gap within bound alpha=" + format_double(g.alpha), "published",
                              g.within_bounds));
    tab.rows.push_back({"line", format_double(g.alpha), format_double(g.max_gap),
                        format_double(g.min_gap), format_double(g.lower_bound),
                        format_double(g.upper_bound), format_double(g.speed)});
    je.push_back({{"alpha", g.alpha}, {"max_gap", g.max_gap}, {"min_gap", g.min_gap}});
  }
  const auto L2 = legendre(Hamiltonian::power(2.0));
  const auto dpp = dpp_check(X, u0, L2, 1.0, 0.5, HopfLaxMode::inf, X.sample_points(), false, ctx.threads);
  r.goldens.push_back(le("dpp discrepancy alpha=2 s=0.5 t=1", "oracle", 2.0 * h, dpp.max_discrepancy));
  const auto sol = solve_inf(X, u0, L2, t, X.sample_points(), {ctx.threads});
  r.goldens.push_back(lipschitz_golden(X, sol.field, 1.0, "alpha=2 t=1", ctx));
  r.report["halfline"] = jg;
  r.report["line_abs"] = je;
  r.tables.push_back(tab);
  return r;
}

}  // namespace

const std::vector<ExperimentInfo>& experiment_registry() {
  static const std::vector<ExperimentInfo> reg{
      {"halfline-nonpreservation", "R+, u0=-x, u_t - |u_x| = 0: convexity lost for t > 0",
       halfline_nonpreservation},
      {"lattice-nonpreservation", "grid graph, eikonal inf, k=4: 1-weak convexity lost",
       lattice_nonpreservation},
      {"cylinder-preservation", "flat cylinder, u0 = height, H = p: u = x3 - t stays convex",
       cylinder_preservation},
      {"busemann-catalog", "Busemann 3/4-point and uniform NPC verdicts on every space",
       busemann_catalog},
      {"lattice-rigidity", "weakly convex functions on the grid graph are constant",
       lattice_rigidity},
      {"npc-preservation-tree", "3-star, u0 = distance to center, H = p^2/2",
       npc_preservation_tree},
      {"subharmonic-preservation", "grid graph, u0 = |x|_1, u_t - |u_x| = 0",
       subharmonic_preservation},
      {"cross-pointwise-loss", "cross space: pointwise convexity lost under the eikonal flow",
       cross_pointwise_loss},
      {"alpha-convergence", "H = p^alpha/alpha approaching the eikonal solution",
       alpha_convergence},
  };
  return reg;
}

ExperimentResult run_experiment(const std::string& name, const ExperimentContext& ctx) {
  for (const auto& e : experiment_registry())
    if (e.name == name) {
      const auto t0 = std::chrono::steady_clock::now();
      auto r = e.run(ctx);
      r.name = name;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    }
  throw ConfigError("unknown experiment '" + name + "' (see experiment --list)");
}

nlohmann::json to_json(const ExperimentResult& r) {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& x : r.goldens) {
    nlohmann::json j = {{"name", x.name}, {"tag", x.tag}, {"relation", x.relation},
                        {"expected", x.expected}, {"actual", x.actual}, {"tol", x.tol},
                        {"pass", x.pass()}};
    if (!x.note.empty()) j["note"] = x.note;
    g.push_back(j);
  }
  return {{"experiment", r.name}, {"pass", r.pass()}, {"seconds", r.seconds},
          {"goldens", g}, {"report", r.report}};
}

CsvTable golden_csv(const ExperimentResult& r) {
  CsvTable t;
  t.file = "goldens.csv";
  t.header = {"golden", "tag", "relation", "expected", "actual", "tol", "status"};
  for (const auto& g : r.goldens)
    t.rows.push_back({g.name, g.tag, g.relation, format_double(g.expected), format_double(g.actual),
                      format_double(g.tol), g.pass() ? "ok" : "MISMATCH"});
  return t;
}

std::string golden_text(const ExperimentResult& r) {
  const auto t = golden_csv(r);
  return text_table(t.header, t.rows);
}

}  // namespace hjc::cli
