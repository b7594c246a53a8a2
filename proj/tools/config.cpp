#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#define TOML_HEADER_ONLY 1
#include <toml.hpp>

#include "hjconvex/point_io.hpp"

namespace hjc::cli {
namespace {

std::optional<std::size_t> line_of(const toml::node& n) {
  const auto& src = n.source();
  if (src.begin.line == 0) return std::nullopt;
  return static_cast<std::size_t>(src.begin.line);
}

// Typed access to one [table] that rejects unknown keys.
class Section {
 public:
  Section(const toml::table* t, std::string name) : t_(t), name_(std::move(name)) {}

  bool present() const { return t_ != nullptr; }

  const toml::node* get(std::string_view key) {
    used_.insert(std::string(key));
    return t_ ? t_->get(key) : nullptr;
  }

  std::optional<double> number(std::string_view key) {
    const auto* n = get(key);
    if (!n) return std::nullopt;
    if (auto v = n->value<double>()) return *v;
    fail(*n, key, "a number");
  }

  std::optional<std::int64_t> integer(std::string_view key) {
    const auto* n = get(key);
    if (!n) return std::nullopt;
    if (n->is_integer()) return n->value<std::int64_t>();
    fail(*n, key, "an integer");
  }

  std::optional<std::string> string(std::string_view key) {
    const auto* n = get(key);
    if (!n) return std::nullopt;
    if (auto v = n->value<std::string>()) return *v;
    fail(*n, key, "a string");
  }

  const toml::array* array(std::string_view key) {
    const auto* n = get(key);
    if (!n) return nullptr;
    if (const auto* a = n->as_array()) return a;
    fail(*n, key, "an array");
  }

  void finish() const {
    if (!t_) return;
    for (const auto& [k, v] : *t_)
      if (!used_.count(std::string(k.str())))
        throw ConfigError("unknown key '" + std::string(k.str()) + "' in [" + name_ + "]",
                          line_of(v));
  }

  std::optional<std::size_t> line() const { return t_ ? line_of(*t_) : std::nullopt; }
  const std::string& name() const { return name_; }

  [[noreturn]] void fail(const toml::node& n, std::string_view key, const std::string& what) const {
    throw ConfigError("[" + name_ + "] " + std::string(key) + " must be " + what, line_of(n));
  }

 private:
  const toml::table* t_;
  std::string name_;
  std::set<std::string> used_;
};

double as_number(const toml::node& n, const std::string& where) {
  if (auto v = n.value<double>()) return *v;
  throw ConfigError(where + ": expected a number", line_of(n));
}

std::vector<std::pair<double, double>> number_pairs(const toml::array& a, const std::string& where) {
  std::vector<std::pair<double, double>> out;
  for (const auto& e : a) {
    const auto* row = e.as_array();
    if (!row || row->size() != 2)
      throw ConfigError(where + ": expected [a, b] pairs", line_of(e));
    out.emplace_back(as_number(*row->get(0), where), as_number(*row->get(1), where));
  }
  return out;
}

PointText point_text(const toml::node& n, const std::string& where) {
  const auto* row = n.as_array();
  if (!row) throw ConfigError(where + ": a point is an array of coordinates", line_of(n));
  PointText out;
  for (const auto& c : *row) {
    if (auto s = c.value<std::string>()) out.push_back(*s);
    else if (c.is_integer()) out.push_back(std::to_string(*c.value<std::int64_t>()));
    else if (auto d = c.value<double>()) out.push_back(format_double(*d));
    else throw ConfigError(where + ": coordinates must be numbers or strings", line_of(c));
  }
  return out;
}

const toml::table* table_at(const toml::table& root, const std::string& key) {
  const auto* n = root.get(key);
  if (!n) return nullptr;
  if (const auto* t = n->as_table()) return t;
  throw ConfigError("'" + key + "' must be a table", line_of(*n));
}

void read_space(Section s, SpaceConfig& out) {
  if (!s.present()) throw ConfigError("missing table [space]");
  const auto kind = s.string("kind");
  if (!kind) throw ConfigError("[space] needs a kind", s.line());
  out.kind = *kind;
  static const std::set<std::string> kinds{"euclidean", "halfline", "cylinder", "lattice",
                                           "tree", "star", "cross"};
  if (!kinds.count(out.kind))
    throw ConfigError("unknown space kind '" + out.kind + "'", line_of(*s.get("kind")));
  if (auto v = s.number("h")) out.h = *v;
  if (auto v = s.integer("dim")) out.dim = static_cast<int>(*v);
  if (const auto* n = s.get("p")) {
    if (auto str = n->value<std::string>(); str && (*str == "inf" || *str == "infinity"))
      out.p = EuclideanSpace::kInfinity;
    else if (auto d = n->value<double>())
      out.p = *d;
    else
      s.fail(*n, "p", "a number or \"inf\"");
  }
  if (auto v = s.number("lo")) out.lo = *v;
  if (auto v = s.number("hi")) out.hi = *v;
  if (auto v = s.integer("level")) out.lattice_level = static_cast<int>(*v);
  if (out.kind == "lattice") {
    if (const auto* n = s.get("h")) {
      // h must be 2^-m so that subdivision points stay exact.
      const double h = out.h;
      const int m = static_cast<int>(std::lround(-std::log2(h)));
      if (!(h > 0.0) || std::ldexp(1.0, -m) != h || m < 0)
        throw ConfigError("[space] lattice h must be a power 2^-m", line_of(*n));
      out.lattice_level = m;
    }
    out.h = std::ldexp(1.0, -out.lattice_level);
  }
  if (const auto* a = s.array("box")) {
    if (a->size() != 4) throw ConfigError("[space] box is [x1_lo, x1_hi, x2_lo, x2_hi]", line_of(*a));
    std::array<std::int64_t, 4> b{};
    for (std::size_t i = 0; i < 4; ++i) {
      const auto* c = a->get(i);
      if (!c->is_integer()) throw ConfigError("[space] box entries must be integers", line_of(*c));
      b[i] = *c->value<std::int64_t>();
    }
    out.box = {b[0], b[1], b[2], b[3]};
  }
  if (auto v = s.integer("l1_radius")) out.l1_radius = *v;
  if (auto v = s.integer("arms")) out.arms = static_cast<int>(*v);
  if (auto v = s.number("arm_length")) out.arm_length = *v;
  if (auto v = s.number("sample_radius")) out.sample_radius = *v;
  if (auto v = s.integer("vertices")) out.vertices = static_cast<int>(*v);
  if (const auto* a = s.array("edges")) {
    for (const auto& e : *a) {
      const auto* row = e.as_array();
      if (!row || row->size() != 3 || !row->get(0)->is_integer() || !row->get(1)->is_integer())
        throw ConfigError("[space] edges are [u, v, length] with integer vertices", line_of(e));
      out.edges.push_back({static_cast<int>(*row->get(0)->value<std::int64_t>()),
                           static_cast<int>(*row->get(1)->value<std::int64_t>()),
                           as_number(*row->get(2), "[space] edges")});
    }
  }
  if (!(out.h > 0.0)) throw ConfigError("[space] h must be positive", s.line());
  s.finish();
}

void read_hamiltonian(Section s, std::optional<HamiltonianConfig>& out) {
  if (!s.present()) return;
  HamiltonianConfig h;
  const auto kind = s.string("kind");
  if (!kind) throw ConfigError("[hamiltonian] needs a kind", s.line());
  h.kind = *kind;
  if (h.kind != "power" && h.kind != "linear" && h.kind != "table" && h.kind != "quadratic")
    throw ConfigError("unknown hamiltonian kind '" + h.kind + "'", line_of(*s.get("kind")));
  if (h.kind == "quadratic") {
    h.kind = "power";
    h.alpha = 2.0;
  }
  if (auto v = s.number("alpha")) h.alpha = *v;
  if (const auto* a = s.array("points")) h.points = number_pairs(*a, "[hamiltonian] points");
  if (auto v = s.integer("grid_size")) h.grid_size = static_cast<int>(*v);
  if (auto v = s.number("p_max")) h.p_max = *v;
  if (h.kind == "power" && !(h.alpha > 1.0))
    throw ConfigError("[hamiltonian] power needs alpha > 1", s.line());
  if (h.kind == "table" && h.points.size() < 2)
    throw ConfigError("[hamiltonian] table needs at least two points", s.line());
  s.finish();
  out = h;
}

void read_initial(Section s, InitialConfig& out) {
  if (!s.present()) throw ConfigError("missing table [initial]");
  if (auto v = s.string("preset")) out.preset.name = *v;
  if (auto v = s.number("value")) out.preset.value = *v;
  if (auto v = s.integer("seed")) out.preset.seed = static_cast<std::uint64_t>(*v);
  if (auto v = s.integer("index")) out.preset.index = static_cast<int>(*v);
  if (auto v = s.number("radius")) out.preset.radius = *v;
  if (auto v = s.number("lipschitz")) out.lipschitz = *v;
  if (const auto* a = s.array("points")) {
    out.table = number_pairs(*a, "[initial] points");
    if (out.table.size() < 2) throw ConfigError("[initial] points needs at least two knots", line_of(*a));
    for (std::size_t i = 1; i < out.table.size(); ++i)
      if (!(out.table[i].first > out.table[i - 1].first))
        throw ConfigError("[initial] points must have increasing x", line_of(*a));
  }
  s.finish();
}

void read_times(Section s, RunConfig& out) {
  if (!s.present()) return;
  if (const auto* a = s.array("values"))
    for (const auto& e : *a) {
      const double t = as_number(e, "[times] values");
      if (!(t >= 0.0)) throw ConfigError("[times] values must be >= 0", line_of(e));
      out.times.push_back(t);
    }
  if (auto m = s.string("mode")) {
    if (*m == "inf") out.mode = HopfLaxMode::inf;
    else if (*m == "sup") out.mode = HopfLaxMode::sup;
    else throw ConfigError("[times] mode is inf or sup", line_of(*s.get("mode")));
  }
  if (auto p = s.string("path")) {
    if (*p != "auto" && *p != "eikonal" && *p != "hopf-lax")
      throw ConfigError("[times] path is auto, eikonal or hopf-lax", line_of(*s.get("path")));
    out.path = *p;
  }
  s.finish();
}

void read_output(Section s, RunConfig& out) {
  if (!s.present()) return;
  if (const auto* a = s.array("queries"))
    for (const auto& e : *a) out.queries.push_back(point_text(e, "[output] queries"));
  s.finish();
}

void read_checks(Section s, CheckConfig& out) {
  if (!s.present()) return;
  if (auto v = s.string("notion")) out.notion = *v;
  if (auto v = s.string("field")) {
    if (*v != "initial" && *v != "solution")
      throw ConfigError("[checks] field is initial or solution", line_of(*s.get("field")));
    out.field = *v;
  }
  if (auto v = s.integer("budget")) {
    if (*v <= 0) throw ConfigError("[checks] budget must be positive", line_of(*s.get("budget")));
    out.budget = static_cast<std::size_t>(*v);
  }
  if (auto v = s.integer("seed")) out.seed = static_cast<std::uint64_t>(*v);
  if (auto v = s.number("tau")) out.tau = *v;
  if (auto v = s.number("delta")) out.delta = *v;
  if (const auto* a = s.array("r_grid"))
    for (const auto& e : *a) out.r_grid.push_back(as_number(e, "[checks] r_grid"));
  if (auto v = s.string("mode")) {
    if (*v != "uniform" && *v != "plain")
      throw ConfigError("[checks] mode is uniform or plain", line_of(*s.get("mode")));
    out.mode = *v;
  }
  if (const auto* a = s.array("pairs"))
    for (const auto& e : *a) {
      const auto* pr = e.as_array();
      if (!pr || pr->size() != 2) throw ConfigError("[checks] pairs are [point, point]", line_of(e));
      out.pairs.push_back({point_text(*pr->get(0), "[checks] pairs"),
                           point_text(*pr->get(1), "[checks] pairs")});
    }
  if (const auto* a = s.array("centers"))
    for (const auto& e : *a) out.centers.push_back(point_text(e, "[checks] centers"));
  s.finish();
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::string& source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    throw ConfigError(std::string(e.description()),
                      static_cast<std::size_t>(e.source().begin.line));
  }
  static const std::set<std::string> tables{"space", "hamiltonian", "initial", "times",
                                            "output", "checks"};
  for (const auto& [k, v] : root)
    if (!tables.count(std::string(k.str())))
      throw ConfigError("unknown table [" + std::string(k.str()) + "]", line_of(v));
  RunConfig cfg;
  cfg.source = source;
  read_space(Section(table_at(root, "space"), "space"), cfg.space);
  read_hamiltonian(Section(table_at(root, "hamiltonian"), "hamiltonian"), cfg.hamiltonian);
  read_initial(Section(table_at(root, "initial"), "initial"), cfg.initial);
  read_times(Section(table_at(root, "times"), "times"), cfg);
  read_output(Section(table_at(root, "output"), "output"), cfg);
  read_checks(Section(table_at(root, "checks"), "checks"), cfg.checks);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

Hamiltonian make_hamiltonian(const HamiltonianConfig& cfg) {
  if (cfg.kind == "power") return Hamiltonian::power(cfg.alpha);
  if (cfg.kind == "linear") return Hamiltonian::linear();
  return Hamiltonian::table(cfg.points);
}

bool uses_eikonal(const RunConfig& cfg) {
  if (cfg.path == "eikonal") return true;
  if (cfg.path == "hopf-lax") return false;
  return cfg.hamiltonian && cfg.hamiltonian->kind == "linear";
}

}  // namespace hjc::cli
