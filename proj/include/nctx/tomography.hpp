#pragma once

#include <array>

#include "nctx/scenario.hpp"
#include "nctx/types.hpp"

namespace nctx {

// Four effective in-plane preparations obtained by mixing each original toward
// the auxiliary until its third coordinate reaches the reduction plane.
struct ReductionResult {
  double plane_w;                    // shared third coordinate of the plane
  std::array<double, 4> mix_params;  // t_i: weight placed on the auxiliary
  std::array<Vec2d, 4> effective;    // (x, y) of the mixed preparations
};

// Requires the auxiliary's third coordinate strictly beyond every original
// (either side). The plane is the nearest valid one, plane_w = max_i w_i (or
// min_i in the flipped case), which keeps the mixing weights minimal.
ReductionResult reduce(const std::array<Vec3d, 4>& originals, const Vec3d& aux);

// reduce() applied to a validated 3-measurement scenario with exactly one
// flagged auxiliary; effective statistics are ready for 2-measurement
// certification.
struct ReducedScenario {
  ReductionResult reduction;
  ScenarioStats effective_stats;
};

ReducedScenario reduce_scenario(const ScenarioStats& stats);

}  // namespace nctx
