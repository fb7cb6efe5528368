#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "licol/types.hpp"

namespace licol {

// Raised instead of ever producing an approximate answer.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  bool yes = false;
  std::optional<Coloring> certificate;
};

// Exhaustive list H-coloring of an arbitrary bipartite graph: backtracking
// over Y colors with forward pruning of per-X feasible sets, then X colors.
// Refuses graphs with more than `cap` vertices in total.
OracleResult brute_force_solve(const BipartiteGraph& g,
                               const std::vector<ColorMask>& x_lists,
                               const std::vector<ColorMask>& y_lists,
                               const TargetGraph& h, int cap = 24);

OracleResult brute_force_solve(const ConvexInstance& inst, const TargetGraph& h,
                               int cap = 24);

// Searches all |X|! orderings for one with the adjacency property. Refuses
// graphs with more than `cap` X-vertices. Returns the lexicographically
// first ordering (as a 1-based X-index sequence), or nullopt.
std::optional<std::vector<int>> find_convex_ordering_bruteforce(
    const BipartiteGraph& g, int cap = 9);

}  // namespace licol
