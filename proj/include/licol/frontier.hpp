#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "licol/types.hpp"

namespace licol {

struct FrontierResult {
  bool yes = false;
  std::optional<Coloring> certificate;  // present iff yes and requested
};

// Sweep DP over X-positions. A state is the vector of rightmost endpoints
// r[c] of the already-started Y-intervals per color c, with entries below
// the sweep position clamped to an expired token. Exact for list H-coloring
// of convex instances; requires h.order == inst.k.
FrontierResult solve_frontier(const ConvexInstance& inst, const TargetGraph& h,
                              bool want_certificate = false);

// Number of distinct normalized states alive after each position 1..n.
std::vector<std::uint64_t> state_census(const ConvexInstance& inst,
                                        const TargetGraph& h);

}  // namespace licol
