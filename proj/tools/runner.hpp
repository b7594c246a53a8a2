#pragma once

#include <chrono>
#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "hjconvex/convexity.hpp"
#include "hjconvex/hopflax.hpp"
#include "hjconvex/lattice_checks.hpp"
#include "hjconvex/point_io.hpp"
#include "hjconvex/presets.hpp"
#include "hjconvex/structure.hpp"
#include "output.hpp"

namespace hjc::cli {

namespace detail {

inline std::function<double(double)> interpolate(const std::vector<std::pair<double, double>>& k) {
  return [k](double x) {
    // Linear between knots, continued with the end slopes outside.
    std::size_t i = 1;
    while (i + 1 < k.size() && x > k[i].first) ++i;
    const auto [x0, y0] = k[i - 1];
    const auto [x1, y1] = k[i];
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  };
}

inline double table_lipschitz(const std::vector<std::pair<double, double>>& k) {
  double K = 0.0;
  for (std::size_t i = 1; i < k.size(); ++i)
    K = std::max(K, std::abs(k[i].second - k[i - 1].second) / (k[i].first - k[i - 1].first));
  return K;
}

}  // namespace detail

template <GeodesicSpace S>
InitialDatum<typename S::Point> resolve_initial(const S& space, const InitialConfig& c) {
  using P = typename S::Point;
  InitialDatum<P> u0;
  if (!c.table.empty()) {
    auto g = detail::interpolate(c.table);
    if constexpr (std::is_same_v<S, HalfLine>) {
      u0 = {[g](const P& p) { return g(p.x); }, detail::table_lipschitz(c.table), "table"};
    } else if constexpr (std::is_same_v<S, EuclideanSpace>) {
      if (space.dim() != 1) throw ConfigError("[initial] points needs a 1-D space");
      u0 = {[g](const P& p) { return g(p[0]); }, detail::table_lipschitz(c.table), "table"};
    } else {
      throw ConfigError("[initial] points needs a 1-D space (euclidean dim 1 or halfline)");
    }
  } else {
    try {
      u0 = make_preset(space, c.preset);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("[initial] ") + e.what());
    }
  }
  if (c.lipschitz) u0.lipschitz = *c.lipschitz;
  return u0;
}

template <GeodesicSpace S>
std::vector<typename S::Point> parse_points(const S& space, const std::vector<PointText>& texts,
                                            const std::string& where) {
  std::vector<typename S::Point> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_point(space, t));
    } catch (const Error& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  return out;
}

template <class P>
struct QueryResult {
  P point;
  PointSolution<P> solution;
};

template <class P>
struct SolveRun {
  std::vector<SolveReport<P>> slices;
  std::vector<std::vector<QueryResult<P>>> queries;  // per time
  std::optional<Lagrangian> lagrangian;
  bool eikonal = false;
  double lipschitz = 0.0;
};

/// The Hopf-Lax operator selected by a config, as a point evaluator at time t.
template <GeodesicSpace S>
struct Operator {
  using P = typename S::Point;
  const S* space;
  InitialDatum<P> u0;
  std::optional<Lagrangian> L;
  HopfLaxMode mode;
  bool eikonal;
  double radius_per_time = 1.0;

  PointSolution<P> at(const P& x, double t) const {
    if (eikonal) return eikonal_at(*space, u0, t, mode, x);
    return hopf_lax_at(*space, u0, *L, t, mode, x, radius_per_time * t);
  }
  std::function<double(const P&)> evaluator(double t) const {
    auto self = *this;
    return [self, t](const P& x) { return self.at(x, t).value; };
  }
};

template <GeodesicSpace S>
Operator<S> make_operator(const S& space, const RunConfig& cfg, bool need_hamiltonian) {
  Operator<S> op{&space, resolve_initial(space, cfg.initial), std::nullopt, cfg.mode, false};
  if (!cfg.hamiltonian) {
    if (need_hamiltonian) throw ConfigError("missing table [hamiltonian]");
    op.eikonal = true;
    return op;
  }
  op.eikonal = uses_eikonal(cfg);
  if (op.eikonal) return op;
  const double K = op.u0.lipschitz ? *op.u0.lipschitz : 0.0;
  if (!op.u0.lipschitz)
    throw ConfigError("[initial] has no Lipschitz constant; set lipschitz = K");
  LegendreOptions lo;
  lo.grid_size = cfg.hamiltonian->grid_size;
  lo.p_max = cfg.hamiltonian->p_max.value_or(100.0 * (1.0 + K));
  op.L = legendre(make_hamiltonian(*cfg.hamiltonian), lo);
  op.radius_per_time = speed_bound(*op.L, K);
  return op;
}

template <GeodesicSpace S>
SolveRun<typename S::Point> run_solve(const S& space, const RunConfig& cfg, unsigned threads) {
  using P = typename S::Point;
  if (cfg.times.empty()) throw ConfigError("[times] values must list at least one time");
  const auto op = make_operator(space, cfg, true);
  const auto queries = parse_points(space, cfg.queries, "[output] queries");
  SolveRun<P> run;
  run.eikonal = op.eikonal;
  run.lagrangian = op.L;
  run.lipschitz = op.u0.lipschitz.value_or(NAN);
  const auto samples = space.sample_points();
  for (double t : cfg.times) {
    SolveReport<P> rep;
    if (t == 0.0 || op.eikonal) {
      rep = solve_eikonal(space, op.u0, t, op.mode, samples, {threads});
    } else {
      rep = solve_hopf_lax(space, op.u0, *op.L, t, op.mode, samples, {threads});
    }
    std::vector<QueryResult<P>> q;
    for (const auto& x : queries) q.push_back({x, op.at(x, t)});
    run.slices.push_back(std::move(rep));
    run.queries.push_back(std::move(q));
  }
  return run;
}

template <GeodesicSpace S>
nlohmann::json solve_json(const S& space, const RunConfig& cfg,
                          const SolveRun<typename S::Point>& run) {
  nlohmann::json slices = nlohmann::json::array();
  for (std::size_t i = 0; i < run.slices.size(); ++i) {
    const auto& r = run.slices[i];
    std::size_t max_cand = 0;
    for (auto c : r.candidates) max_cand = std::max(max_cand, c);
    nlohmann::json q = nlohmann::json::array();
    for (const auto& e : run.queries[i])
      q.push_back({{"point", point_json(space, e.point)},
                   {"value", e.solution.value},
                   {"witness", point_json(space, e.solution.witness)},
                   {"candidates", e.solution.candidates}});
    slices.push_back({{"t", cfg.times[i]},
                      {"mode", to_string(cfg.mode)},
                      {"formula", run.eikonal || cfg.times[i] == 0.0 ? "ball" : "hopf-lax"},
                      {"speed", r.speed},
                      {"radius", r.radius},
                      {"points", r.field.size()},
                      {"max_candidates", max_cand},
                      {"seconds", r.seconds},
                      {"queries", q}});
  }
  nlohmann::json j = {{"space", space.name()},
                      {"initial", cfg.initial.table.empty() ? cfg.initial.preset.name : "table"},
                      {"slices", slices}};
  if (std::isfinite(run.lipschitz)) j["lipschitz"] = run.lipschitz;
  if (cfg.hamiltonian) j["hamiltonian"] = cfg.hamiltonian->kind;
  return j;
}

template <GeodesicSpace S>
CsvTable field_table(const S& space, const SolveReport<typename S::Point>& r,
                     const std::string& file) {
  CsvTable t;
  t.file = file;
  t.header = point_columns(space);
  t.header.push_back("value");
  for (const auto& c : point_columns(space)) t.header.push_back("witness_" + c);
  for (std::size_t i = 0; i < r.field.size(); ++i) {
    auto row = point_fields(space, r.field.points()[i]);
    row.push_back(format_double(r.field.values()[i]));
    for (auto& f : point_fields(space, r.witnesses[i])) row.push_back(f);
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Result of one config-driven check.
struct CheckOutcome {
  bool pass = true;
  nlohmann::json reports = nlohmann::json::array();
  CsvTable table;
};

std::vector<std::string> check_notions();

template <GeodesicSpace S>
CheckOutcome run_check(const S& space, const RunConfig& cfg, const std::string& notion,
                       unsigned threads, std::uint64_t seed) {
  using P = typename S::Point;
  constexpr bool lattice = std::is_same_v<S, Lattice2>;
  const auto& cc = cfg.checks;
  const double h = space.resolution();
  const bool structural = notion == "busemann3" || notion == "busemann4" ||
                          notion == "equivalence" || notion == "uniform-npc" ||
                          notion == "midpoint-stability";
  CheckOptions opt;
  opt.budget = cc.budget;
  opt.seed = cc.seed.value_or(seed);
  opt.threads = threads;
  opt.tau = cc.tau.value_or(lattice ? 0.0 : (structural ? 1e-12 : 1e-9));
  const double delta = cc.delta.value_or(4.0 * h);
  std::vector<double> r_grid = cc.r_grid;
  if (r_grid.empty()) r_grid = {h, 2.0 * h, 4.0 * h};
  const auto samples = space.sample_points();

  CheckOutcome out;
  out.table.file = "check.csv";
  out.table.header = {"notion", "field", "verdict", "worst_margin", "tested", "violations", "witness"};
  auto emit = [&](const CheckReport<P>& rep, const std::string& field) {
    out.pass = out.pass && rep.pass;
    auto j = to_json(space, rep);
    j["field"] = field;
    out.reports.push_back(j);
    std::string w;
    for (std::size_t i = 0; i < rep.witness.size(); ++i)
      w += (i ? " " : "") + point_label(space, rep.witness[i]);
    out.table.rows.push_back({rep.notion, field, rep.pass ? "PASS" : "FAIL",
                              std::isfinite(rep.worst_margin) ? format_double(rep.worst_margin) : "",
                              std::to_string(rep.tested), std::to_string(rep.violations), w});
  };

  if (structural) {
    if (notion == "busemann3") emit(check_busemann3(space, samples, opt), "-");
    else if (notion == "busemann4") emit(check_busemann4(space, samples, opt), "-");
    else if (notion == "midpoint-stability") emit(check_midpoint_stability(space, samples, opt), "-");
    else if (notion == "equivalence") {
      auto eq = check_equivalence_3_4(space, samples, opt);
      emit(eq.three, "-");
      emit(eq.four, "-");
      out.pass = eq.agree;
      out.reports.push_back({{"notion", "equivalence"}, {"agree", eq.agree}});
    } else {
      auto centers = parse_points(space, cc.centers, "[checks] centers");
      if (centers.empty()) centers = {samples[samples.size() / 2]};
      if (!cc.delta) throw ConfigError("[checks] uniform-npc needs delta");
      emit(check_uniform_npc(space, *cc.delta, centers, opt), "-");
    }
    return out;
  }

  std::vector<std::pair<P, P>> named;
  for (const auto& pr : cc.pairs) {
    auto two = parse_points(space, {pr[0], pr[1]}, "[checks] pairs");
    named.emplace_back(two[0], two[1]);
  }
  const auto op = make_operator(space, cfg, false);
  std::vector<std::pair<std::string, FieldView<P>>> fields;
  if (cc.field == "initial") {
    fields.emplace_back("initial", view_of(op.u0, samples));
  } else {
    if (cfg.times.empty()) throw ConfigError("[checks] field = \"solution\" needs [times] values");
    if (!op.eikonal && !op.L) throw ConfigError("missing table [hamiltonian]");
    for (double t : cfg.times)
      fields.emplace_back("t=" + format_double(t),
                          memoize(FieldView<P>{samples, op.evaluator(t), op.u0.lipschitz}));
  }
  for (const auto& [label, f] : fields) {
    if (notion == "weak-geodesic" || notion == "strong-geodesic") {
      emit(check_weak_geodesic(space, f, opt, notion == "strong-geodesic", named), label);
    } else if (notion == "local-to-global") {
      auto r = check_local_to_global(space, f, delta, opt);
      emit(r.local, label);
      emit(r.doubled, label);
      out.pass = out.pass && r.pass;
    } else if (notion == "infty-subharmonious") {
      emit(check_infty_subharmonious(space, f, delta, r_grid,
                                     cc.mode == "plain" ? SubharmoniousMode::plain
                                                        : SubharmoniousMode::uniform,
                                     opt),
           label);
    } else if (notion == "pointwise") {
      emit(check_pointwise(space, f, r_grid, opt), label);
    } else if (notion == "lipschitz") {
      auto r = lipschitz_estimate(space, f, opt);
      emit(r, label);
    } else if (notion == "one-weak" || notion == "one-strong") {
      if constexpr (lattice) {
        emit(check_one_weak_lattice(space, f, opt, notion == "one-strong", named), label);
      } else {
        throw ConfigError("notion " + notion + " needs a lattice space");
      }
    } else {
      throw ConfigError("unknown notion '" + notion + "'");
    }
  }
  return out;
}

}  // namespace hjc::cli
