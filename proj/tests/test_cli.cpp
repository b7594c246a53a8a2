#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "experiments.hpp"

namespace fs = std::filesystem;
using namespace hjc::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hjconvex");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(HJCONVEX_CONFIG_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("hjconvex_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_config(const std::string& name, const std::string& text) {
  auto p = fs::temp_directory_path() / (name + ".toml");
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("experiment list and unknown experiment") {
  const auto r = cli({"experiment", "--list"});
  CHECK(r.code == 0);
  for (const auto& e : experiment_registry()) CHECK(r.out.find(e.name) != std::string::npos);
  CHECK(cli({"experiment", "no-such-experiment"}).code == 2);
  CHECK(cli({"experiment"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("constant initial data gives a constant field") {
  const auto dir = scratch("constant");
  const auto r = cli({"solve", "--config", config("constant.toml"), "--out", dir.string(), "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK_FALSE(fs::exists(dir / "solve.json"));
  std::ifstream in(dir / "solution_t=1.csv");
  std::string line;
  std::getline(in, line);
  const auto header = line;
  CHECK(header.rfind("x1,x2,value", 0) == 0);
  int rows = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string a, b, v;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, v, ',');
    CHECK(std::stod(v) == 3.5);
    ++rows;
  }
  CHECK(rows == 81);
}

TEST_CASE("missing hamiltonian is a configuration error") {
  const auto r = cli({"solve", "--config", config("missing-hamiltonian.toml"), "--out", scratch("mh").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("[hamiltonian]") != std::string::npos);
}

TEST_CASE("plain config reproduces the registered lattice experiment bit for bit") {
  const auto a = scratch("lattice_solve"), b = scratch("lattice_exp");
  REQUIRE(cli({"solve", "--config", config("lattice-nonpreservation.toml"), "--out", a.string(), "--threads", "4"}).code == 0);
  REQUIRE(cli({"experiment", "lattice-nonpreservation", "--out", b.string(), "--threads", "2"}).code == 0);
  const auto x = slurp(a / "solution_t=4.csv"), y = slurp(b / "solution_t=4.csv");
  CHECK(!x.empty());
  CHECK(x == y);
}

TEST_CASE("solve output does not depend on the thread count") {
  const auto a = scratch("th1"), b = scratch("th8");
  REQUIRE(cli({"solve", "--config", config("tree-quadratic.toml"), "--out", a.string(), "--threads", "1"}).code == 0);
  REQUIRE(cli({"solve", "--config", config("tree-quadratic.toml"), "--out", b.string(), "--threads", "8"}).code == 0);
  for (const char* f : {"solution_t=0.25.csv", "solution_t=0.5.csv", "solution_t=1.csv"})
    CHECK(slurp(a / f) == slurp(b / f));
}

TEST_CASE("check command verdicts and exit codes") {
  const auto euclid = cli({"check", "--config", config("euclidean-busemann.toml"), "--out", scratch("c1").string()});
  CHECK(euclid.code == 0);
  const auto weak = cli({"check", "--config", config("lattice-norm-weak.toml"), "--out", scratch("c2").string()});
  CHECK(weak.code == 1);
  CHECK(weak.out.find("(1/2^1,1/2^0) (1/2^0,1/2^1) (1/2^0,1/2^0)") != std::string::npos);
  const auto one = cli({"check", "--config", config("lattice-norm-one-weak.toml"), "--out", scratch("c3").string()});
  CHECK(one.code == 0);
  const auto over = cli({"check", "--config", config("lattice-norm-weak.toml"), "--notion", "one-weak",
                         "--out", scratch("c4").string()});
  CHECK(over.code == 0);
  CHECK(cli({"check", "--config", config("lattice-norm-weak.toml"), "--notion", "convex-ish"}).code == 2);
  CHECK(cli({"check", "--config", config("constant.toml"), "--out", scratch("c5").string()}).code == 2);
  const auto tree = cli({"check", "--config", config("tree-quadratic.toml"), "--out", scratch("c6").string()});
  CHECK(tree.code == 0);
}

TEST_CASE("config validation reports the line") {
  const auto p = write_config("hjconvex_badkey", "[space]\nkind = \"halfline\"\nh = 0.1\nwidth = 3\n");
  const auto r = cli({"solve", "--config", p.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK_THROWS_AS(parse_config("[space]\nkind = \"lattice\"\nh = 0.3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[weather]\nsunny = true\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[space\n"), ConfigError);
  CHECK(cli({"solve", "--config", "/nonexistent/file.toml"}).code == 2);
}

TEST_CASE("config parsing") {
  const auto c = parse_config(R"(
[space]
kind = "euclidean"
dim = 2
p = "inf"
h = 0.5

[hamiltonian]
kind = "quadratic"

[initial]
preset = "norm"

[times]
values = [0.5, 1]
mode = "sup"
)");
  CHECK(c.space.kind == "euclidean");
  CHECK(c.space.dim == 2);
  CHECK(std::isinf(c.space.p));
  REQUIRE(c.hamiltonian.has_value());
  CHECK(c.hamiltonian->kind == "power");
  CHECK(c.hamiltonian->alpha == 2.0);
  CHECK(c.times == std::vector<double>{0.5, 1.0});
  CHECK(c.mode == hjc::HopfLaxMode::sup);
  const auto l = parse_config("[space]\nkind = \"lattice\"\nh = 0.25\n[hamiltonian]\nkind = \"linear\"\n[initial]\npreset = \"norm\"\n");
  CHECK(l.space.lattice_level == 2);
  CHECK(uses_eikonal(l));
}

TEST_CASE("lattice experiment config mirrors the file") {
  const auto file = load_config(config("lattice-nonpreservation.toml"));
  const auto code = lattice_nonpreservation_config();
  CHECK(file.space.kind == code.space.kind);
  CHECK(file.space.lattice_level == code.space.lattice_level);
  CHECK(file.space.box.x1_lo == code.space.box.x1_lo);
  CHECK(file.space.box.x2_hi == code.space.box.x2_hi);
  CHECK(file.space.l1_radius == code.space.l1_radius);
  CHECK(file.initial.preset.name == code.initial.preset.name);
  CHECK(file.initial.preset.radius == code.initial.preset.radius);
  CHECK(file.times == code.times);
  CHECK(file.queries == code.queries);
}

TEST_CASE("tabulated initial data on the half-line") {
  const auto p = write_config("hjconvex_table", R"(
[space]
kind = "halfline"
h = 0.5
hi = 4

[hamiltonian]
kind = "linear"

[initial]
points = [[0, 0], [2, 2], [4, 0]]

[times]
values = [1]
mode = "inf"

[output]
queries = [["2"]]
)");
  const auto dir = scratch("table");
  const auto r = cli({"solve", "--config", p.string(), "--out", dir.string(), "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "solve.json"));
  CHECK(r.out.find("1  (2)    1      (1)") != std::string::npos);
}
