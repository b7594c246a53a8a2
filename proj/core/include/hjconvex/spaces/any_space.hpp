#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hjconvex/spaces/cylinder.hpp"
#include "hjconvex/spaces/euclidean.hpp"
#include "hjconvex/spaces/halfline.hpp"
#include "hjconvex/spaces/lattice.hpp"
#include "hjconvex/spaces/tree.hpp"

namespace hjc {

using AnySpace = std::variant<EuclideanSpace, HalfLine, Cylinder, Lattice2, MetricTree>;

/// Plain description of a space, as read from a config file.
struct SpaceConfig {
  std::string kind = "euclidean";  // euclidean, halfline, cylinder, lattice, tree, star, cross
  double h = 0.1;
  int dim = 1;
  double p = 2.0;
  double lo = -1.0;  // sampling window (per coordinate, or height for the cylinder)
  double hi = 1.0;
  int lattice_level = 2;  // h = 2^-level
  Lattice2::Box box{};
  std::optional<std::int64_t> l1_radius;
  int vertices = 0;
  std::vector<TreeEdge> edges;
  int arms = 3;
  double arm_length = 1.0;
  std::optional<double> sample_radius;
};

AnySpace make_space(const SpaceConfig& cfg);

}  // namespace hjc
