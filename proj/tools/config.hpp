#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hjconvex/hamiltonian.hpp"
#include "hjconvex/hopflax.hpp"
#include "hjconvex/presets.hpp"
#include "hjconvex/spaces/any_space.hpp"

namespace hjc::cli {

/// Invalid or unreadable configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + msg : msg), line_(line) {}
  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

struct HamiltonianConfig {
  std::string kind = "power";  // power, linear, table
  double alpha = 2.0;
  std::vector<std::pair<double, double>> points;
  int grid_size = 4096;
  std::optional<double> p_max;
};

struct InitialConfig {
  PresetSpec preset;
  /// (x, u0(x)) knots for 1-D spaces; empty means use the preset.
  std::vector<std::pair<double, double>> table;
  std::optional<double> lipschitz;
};

using PointText = std::vector<std::string>;

struct CheckConfig {
  std::string notion;
  std::string field = "initial";  // initial or solution
  std::size_t budget = 4000;
  std::optional<std::uint64_t> seed;
  std::optional<double> tau;
  std::optional<double> delta;
  std::vector<double> r_grid;
  std::string mode = "uniform";
  std::vector<std::array<PointText, 2>> pairs;
  std::vector<PointText> centers;
};

struct RunConfig {
  SpaceConfig space;
  std::optional<HamiltonianConfig> hamiltonian;
  InitialConfig initial;
  std::vector<double> times;
  HopfLaxMode mode = HopfLaxMode::inf;
  std::string path = "auto";  // auto, eikonal, hopf-lax
  std::vector<PointText> queries;
  CheckConfig checks;
  std::string source = "<config>";
};

RunConfig parse_config(std::string_view text, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

Hamiltonian make_hamiltonian(const HamiltonianConfig& cfg);

/// True iff the config selects the ball (eikonal) formula.
bool uses_eikonal(const RunConfig& cfg);

}  // namespace hjc::cli
