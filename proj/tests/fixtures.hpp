#pragma once

#include <array>
#include <string>

#include "licol/types.hpp"

namespace licol::tests {

// Reference instance: 9 X-vertices over 3 colors, four Y-intervals.
inline ConvexInstance reference_instance() {
  ConvexInstance inst;
  inst.k = 3;
  inst.x_lists = {
      mask_of({1, 3}), mask_of({1, 2}), mask_of({1, 2, 3}),
      mask_of({1, 2}), mask_of({1, 2}), mask_of({2, 3}),
      mask_of({1, 3}), mask_of({1, 3}), mask_of({1, 3}),
  };
  inst.ys = {
      {1, 5, mask_of({1, 2})},
      {4, 7, mask_of({2, 3})},
      {7, 8, mask_of({1, 3})},
      {5, 9, mask_of({1, 2})},
  };
  return inst;
}

// A coloring of the reference instance known to be proper.
inline Coloring reference_witness() {
  return {{1, 1, 1, 1, 1, 3, 3, 3, 1}, {2, 2, 1, 2}};
}

// The underlying graph of the reference instance (convex, not biconvex).
inline BipartiteGraph reference_graph() {
  BipartiteGraph g;
  g.x_count = 9;
  g.y_adj = {{1, 2, 3, 4, 5}, {4, 5, 6, 7}, {7, 8}, {5, 6, 7, 8, 9}};
  return g;
}

// The corner-shaped convex graph whose BFS layers from x1 form chains.
inline BipartiteGraph corner_graph() {
  BipartiteGraph g;
  g.x_count = 7;
  g.y_adj = {{1, 2, 3}, {1, 2, 3, 4}, {3, 4, 5, 6, 7}, {4, 5, 6, 7}};
  return g;
}

// Two-subdivided claw as a bipartite graph: center x1, mids y1..y3,
// tips x2..x4.
inline BipartiteGraph subd_k13_graph() {
  BipartiteGraph g;
  g.x_count = 4;
  g.y_adj = {{1, 2}, {1, 3}, {1, 4}};
  return g;
}

// Star K_{1,3}: no subdivision present.
inline BipartiteGraph star_k13_graph() {
  BipartiteGraph g;
  g.x_count = 3;
  g.y_adj = {{1, 2, 3}};
  return g;
}

// Expected truth grids for the reference instance, stage 1, over columns
// {1},{2},{3},{1,2},{1,3},{2,3} and rows {x1,x2,x3},{x4},{x5}.
inline constexpr std::array<std::array<bool, 6>, 3> kStage1AfterStep1 = {{
    {true, true, true, false, false, true},
    {true, true, true, false, true, true},
    {true, true, true, false, true, true},
}};

inline constexpr std::array<std::array<bool, 6>, 3> kStage1AfterStep2a = {{
    {true, true, false, false, false, true},
    {true, true, false, false, true, true},
    {true, true, false, false, true, true},
}};

inline std::string test_data_path(const std::string& name) {
  return std::string(LICOL_TEST_DATA_DIR) + "/" + name;
}

}  // namespace licol::tests
