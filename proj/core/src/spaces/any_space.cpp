#include "hjconvex/spaces/any_space.hpp"

#include "hjconvex/error.hpp"

namespace hjc {

AnySpace make_space(const SpaceConfig& cfg) {
  if (cfg.kind == "euclidean") return EuclideanSpace(cfg.dim, cfg.p, cfg.h, cfg.lo, cfg.hi);
  if (cfg.kind == "halfline") return HalfLine(cfg.h, cfg.hi);
  if (cfg.kind == "cylinder") return Cylinder(cfg.h, cfg.lo, cfg.hi);
  if (cfg.kind == "lattice") return Lattice2(cfg.lattice_level, cfg.box, cfg.l1_radius);
  if (cfg.kind == "star") {
    MetricTree t = MetricTree::star(cfg.arms, cfg.arm_length, cfg.h);
    if (!cfg.sample_radius) return t;
    std::vector<TreeEdge> edges = t.edges();
    return MetricTree(cfg.arms + 1, edges, cfg.h, std::make_pair(0, *cfg.sample_radius), t.name());
  }
  if (cfg.kind == "cross")
    return MetricTree::cross(cfg.arm_length, cfg.h, cfg.sample_radius.value_or(cfg.arm_length));
  if (cfg.kind == "tree") {
    std::optional<std::pair<int, double>> window;
    if (cfg.sample_radius) window = std::make_pair(0, *cfg.sample_radius);
    return MetricTree(cfg.vertices, cfg.edges, cfg.h, window);
  }
  throw DomainError("unknown space kind '" + cfg.kind + "'");
}

}  // namespace hjc
