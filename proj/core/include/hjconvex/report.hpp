#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hjconvex/point_io.hpp"

namespace hjc {

/// Outcome of a convexity or curvature check.
///
/// margin is the slack of the tested inequality (negative = violated);
/// worst_margin is the smallest slack seen and `witness` the configuration
/// that produced it, recorded even when the verdict is PASS within tau.
template <class P>
struct CheckReport {
  std::string notion;
  bool pass = true;
  double tau = 0.0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<P> witness;
  std::size_t tested = 0;
  std::size_t violations = 0;  // margin < -tau
  std::size_t skipped = 0;
  nlohmann::json details = nlohmann::json::object();

  void record(double margin, std::vector<P> config) {
    ++tested;
    if (margin < -tau) ++violations;
    if (margin < worst_margin) {
      worst_margin = margin;
      witness = std::move(config);
    }
  }
  void finish() { pass = violations == 0; }
};

template <class S, class P>
nlohmann::json to_json(const S& space, const CheckReport<P>& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& p : r.witness) w.push_back(point_json(space, p));
  nlohmann::json j = {{"notion", r.notion},
                      {"verdict", r.pass ? "PASS" : "FAIL"},
                      {"tau", r.tau},
                      {"tested", r.tested},
                      {"violations", r.violations},
                      {"skipped", r.skipped},
                      {"witness", w},
                      {"details", r.details},
                      {"space", space.name()}};
  if (std::isfinite(r.worst_margin)) j["worst_margin"] = r.worst_margin;
  else j["worst_margin"] = nullptr;
  return j;
}

}  // namespace hjc
