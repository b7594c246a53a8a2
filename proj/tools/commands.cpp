#include "commands.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "experiments.hpp"
#include "runner.hpp"

namespace hjc::cli {

std::vector<std::string> check_notions() {
  return {"weak-geodesic", "strong-geodesic", "local-to-global", "infty-subharmonious",
          "pointwise",     "lipschitz",       "one-weak",        "one-strong",
          "busemann3",     "busemann4",       "equivalence",     "uniform-npc",
          "midpoint-stability"};
}

namespace {

struct Flags {
  std::string config;
  std::string out = "out";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "both";
  std::string notion;
  std::string experiment;
  bool list = false;
};

std::string slice_file(double t) { return "solution_t=" + format_double(t) + ".csv"; }

int do_solve(const Flags& fl, std::ostream& out) {
  const auto cfg = load_config(fl.config);
  const auto fmt = parse_format(fl.format);
  const auto space = make_space(cfg.space);
  return std::visit(
      [&](const auto& X) {
        const auto run = run_solve(X, cfg, fl.threads);
        std::vector<CsvTable> tables;
        for (std::size_t i = 0; i < run.slices.size(); ++i)
          tables.push_back(field_table(X, run.slices[i], slice_file(cfg.times[i])));
        write_outputs(fl.out, "solve", solve_json(X, cfg, run), tables, fmt);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < run.slices.size(); ++i) {
          for (const auto& q : run.queries[i])
            rows.push_back({format_double(cfg.times[i]), point_label(X, q.point),
                            format_double(q.solution.value), point_label(X, q.solution.witness)});
        }
        out << X.name() << ": " << run.slices.size() << " slice(s), "
            << (run.slices.empty() ? 0 : run.slices[0].field.size()) << " points each\n";
        if (!rows.empty()) out << text_table({"t", "point", "value", "witness"}, rows);
        return 0;
      },
      space);
}

int do_check(const Flags& fl, std::ostream& out) {
  auto cfg = load_config(fl.config);
  const std::string notion = fl.notion.empty() ? cfg.checks.notion : fl.notion;
  if (notion.empty()) throw ConfigError("no notion given (use --notion or [checks] notion)");
  const auto known = check_notions();
  if (std::find(known.begin(), known.end(), notion) == known.end())
    throw ConfigError("unknown notion '" + notion + "'");
  const auto fmt = parse_format(fl.format);
  const auto space = make_space(cfg.space);
  return std::visit(
      [&](const auto& X) {
        const auto res = run_check(X, cfg, notion, fl.threads, fl.seed);
        nlohmann::json j = {{"space", X.name()}, {"notion", notion}, {"pass", res.pass},
                            {"reports", res.reports}};
        write_outputs(fl.out, "check", j, {res.table}, fmt);
        out << text_table(res.table.header, res.table.rows);
        out << (res.pass ? "PASS" : "FAIL") << "\n";
        return res.pass ? 0 : 1;
      },
      space);
}

int do_experiment(const Flags& fl, std::ostream& out) {
  if (fl.list) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : experiment_registry()) rows.push_back({e.name, e.summary});
    out << text_table({"experiment", "summary"}, rows);
    return 0;
  }
  if (fl.experiment.empty()) throw ConfigError("experiment needs a name or --list");
  const auto fmt = parse_format(fl.format);
  const auto r = run_experiment(fl.experiment, {fl.seed, fl.threads});
  auto tables = r.tables;
  tables.push_back(golden_csv(r));
  write_outputs(fl.out, r.name, to_json(r), tables, fmt);
  out << golden_text(r);
  out << r.name << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << format_double(r.seconds) << " s)\n";
  return r.pass() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf-Lax solver and convexity checks on geodesic metric spaces", "hjconvex"};
  app.require_subcommand(1);
  Flags fl;
  auto common = [&](CLI::App* c, bool config) {
    if (config) c->add_option("--config", fl.config, "config file")->required();
    c->add_option("--out", fl.out, "output directory");
    c->add_option("--seed", fl.seed, "random seed");
    c->add_option("--threads", fl.threads, "worker threads")->check(CLI::PositiveNumber);
    c->add_option("--format", fl.format, "json, csv or both");
  };
  auto* solve = app.add_subcommand("solve", "solve over the configured space and times");
  common(solve, true);
  auto* check = app.add_subcommand("check", "run one convexity or structure check");
  common(check, true);
  check->add_option("--notion", fl.notion, "check to run");
  auto* exp = app.add_subcommand("experiment", "run a registered experiment");
  common(exp, false);
  exp->add_option("name", fl.experiment, "experiment name");
  exp->add_flag("--list", fl.list, "list registered experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    if (solve->parsed()) return do_solve(fl, out);
    if (check->parsed()) return do_check(fl, out);
    return do_experiment(fl, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const hjc::Error& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hjc::cli
