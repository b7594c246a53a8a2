#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "output.hpp"

namespace hjc::cli {

/// One expected value of an experiment. `tag` says where the value comes
/// from: "published" (stated in the literature), "oracle" (independent
/// computation) or "identity" (follows from the definitions).
struct Golden {
  std::string name;
  std::string tag;
  std::string relation;  // ==, <=, <, >=, holds
  double expected = 0.0;
  double actual = 0.0;
  double tol = 0.0;
  std::string note;

  bool pass() const;
};

struct ExperimentContext {
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct ExperimentResult {
  std::string name;
  std::vector<Golden> goldens;
  nlohmann::json report = nlohmann::json::object();
  std::vector<CsvTable> tables;
  double seconds = 0.0;

  bool pass() const;
  const Golden* find(const std::string& golden) const;
};

struct ExperimentInfo {
  std::string name;
  std::string summary;
  std::function<ExperimentResult(const ExperimentContext&)> run;
};

const std::vector<ExperimentInfo>& experiment_registry();

/// Throws ConfigError for unknown names.
ExperimentResult run_experiment(const std::string& name, const ExperimentContext& ctx);

nlohmann::json to_json(const ExperimentResult& r);
CsvTable golden_csv(const ExperimentResult& r);
std::string golden_text(const ExperimentResult& r);

/// The lattice non-preservation run as a plain config; configs/ carries the
/// same thing as a file.
RunConfig lattice_nonpreservation_config();

}  // namespace hjc::cli
