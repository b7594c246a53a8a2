#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hjconvex/field.hpp"
#include "hjconvex/spaces/any_space.hpp"

namespace hjc {

/// Named initial data. `index` and `seed` select a member of the seeded
/// convex families; `value` is the level of "constant"; `radius` bounds
/// the region where a Lipschitz constant is claimed for data that only
/// have a local one (quadratic, quadrant-product).
struct PresetSpec {
  std::string name = "constant";
  double value = 0.0;
  std::uint64_t seed = 1;
  int index = 0;
  double radius = 20.0;
};

InitialDatum<EuclideanPoint> make_preset(const EuclideanSpace& s, const PresetSpec& p);
InitialDatum<HalfLinePoint> make_preset(const HalfLine& s, const PresetSpec& p);
InitialDatum<CylinderPoint> make_preset(const Cylinder& s, const PresetSpec& p);
InitialDatum<LatticePoint> make_preset(const Lattice2& s, const PresetSpec& p);
InitialDatum<TreePoint> make_preset(const MetricTree& s, const PresetSpec& p);

/// Preset names accepted by make_preset for a space of this kind.
std::vector<std::string> preset_names(const std::string& space_kind);

/// Lattice datum of the non-preservation example: (x1 + 1) x2 on the closed
/// first quadrant, 0 elsewhere.
double quadrant_product(const LatticePoint& p);

}  // namespace hjc
