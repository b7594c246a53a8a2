#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hjconvex/convexity.hpp"
#include "hjconvex/spaces/lattice.hpp"

namespace hjc {

/// Pairs tested by the 1-weak notion: min{|x1-y1|, |x2-y2|} is 0 or >= 1.
bool one_weak_admissible(const LatticePoint& x, const LatticePoint& y);

/// Explicit midpoint for pairs with min{|x1-y1|, |x2-y2|} >= 1, built in the
/// normalized frame x1+y1 >= 0, x2+y2 >= x1+y1 and mapped back by the
/// reflections and the coordinate swap of the grid. Always a midpoint for
/// vertex pairs; for edge points it can leave M(x, y), e.g. (5/4,-3), (1/4,2).
LatticePoint constructive_midpoint(const LatticePoint& x, const LatticePoint& y);

/// Weak (or, with `strong`, strong) geodesic convexity restricted to
/// admissible pairs; admissible `named` pairs are tested first. For pairs with
/// min >= 1 the explicit midpoint is also evaluated and verified to lie in
/// M(x, y); details["construction_misses"] counts failures of that.
CheckReport<LatticePoint> check_one_weak_lattice(const Lattice2& space,
                                                 const FieldView<LatticePoint>& f,
                                                 const CheckOptions& opt = {},
                                                 bool strong = false,
                                                 const std::vector<std::pair<LatticePoint, LatticePoint>>& named = {});

/// Linear inequalities a . u >= 0 over integer coefficients.
struct LinearInequality {
  std::vector<std::int64_t> a;
  std::string text;
};

/// Fourier-Motzkin test: does {a_i . u >= 0} admit u with u_k >= 1 or
/// u_k <= -1 for some k? False means the only solution is u = 0.
bool has_nonzero_solution(const std::vector<LinearInequality>& system, std::size_t vars);

struct RigidityReport {
  std::vector<LinearInequality> three;  // limits with u(0,0) = 0, variables u(1,0), u(0,1), u(1,1)
  std::vector<LinearInequality> cell;   // all four corner limits, variables u00, u10, u01, u11
  bool three_unique = false;
  std::optional<std::vector<std::int64_t>> three_counterexample;
  bool cell_unique_up_to_constants = false;
  bool cell_unique_with_anchor = false;
  std::size_t trials = 0;
  std::size_t passing = 0;
  std::size_t passing_nonconstant = 0;
  double max_passing_spread = 0.0;
  bool pass = false;
};

/// Rigidity of weakly geodesically convex functions on the grid graph:
/// eliminates the corner limit inequalities of one cell, and runs seeded
/// random fields on a 3x3 vertex patch (linear along edges, sampled at
/// h = 1/2) through an exhaustive weak convexity test with tolerance tau.
RigidityReport lattice_rigidity_check(std::size_t trials, std::uint64_t seed, double tau);

/// Piecewise-linear field on the vertex patch {0,1,2}^2; values[3*j + i]
/// belongs to vertex (i, j).
double patch_value(const std::vector<double>& values, const LatticePoint& p);

}  // namespace hjc
