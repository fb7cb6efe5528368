#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "licol/oracle.hpp"  // CapExceeded
#include "licol/types.hpp"

namespace licol {

// Structure checks work on a unified vertex id space: ids 0..x_count-1 are
// x_1..x_n, the rest are y_1..y_m in input order.

int x_vertex(const BipartiteGraph& g, int i);  // 1-based x index -> id
int y_vertex(const BipartiteGraph& g, int j);  // 1-based y index -> id
bool is_x_vertex(const BipartiteGraph& g, int v);
std::string vertex_label(const BipartiteGraph& g, int v);  // "x3", "y1"
int parse_vertex(const BipartiteGraph& g, const std::string& label);

std::vector<std::vector<int>> unified_adjacency(const BipartiteGraph& g);

struct LayeredOrdering {
  int source = 0;
  std::vector<std::vector<int>> layers;  // ids, ascending within a layer
  std::vector<int> unreached;
};

LayeredOrdering bfs_layers(const BipartiteGraph& g, int v0);

// Four vertices spanning two independent edges a1-b1, a2-b2 with both
// straight pairs absent.
struct ChainWitness {
  int a1 = 0, b1 = 0, a2 = 0, b2 = 0;
};

struct ChainCheck {
  bool ok = true;
  std::optional<ChainWitness> witness;
};

// True iff the neighborhoods of layer_a restricted to layer_b are totally
// ordered by inclusion.
ChainCheck is_chain_between(const BipartiteGraph& g,
                            const std::vector<int>& layer_a,
                            const std::vector<int>& layer_b);

struct MultichainCheck {
  bool ok = true;
  int failing_layer = -1;  // i of the first failing pair (L_i, L_i+1)
  std::optional<ChainWitness> witness;
};

MultichainCheck verify_multichain(const BipartiteGraph& g,
                                  const LayeredOrdering& layered);

// Orders are 1-based index sequences over X resp. Y; both sides must have
// consecutive neighborhoods. Non-permutations throw.
bool verify_biconvex(const BipartiteGraph& g, const std::vector<int>& x_order,
                     const std::vector<int>& y_order);

struct StraightCheck {
  bool ok = true;
  std::array<int, 4> crossing{};  // ids x, y, x', y' of the bad crossing
};

// `order` lists all vertex ids; every crossing edge pair must have a
// straight pair present. Non-permutations throw.
StraightCheck verify_straight(const BipartiteGraph& g,
                              const std::vector<int>& order);

struct SubdivisionWitness {
  int center = 0;
  std::array<int, 3> mids{};
  std::array<int, 3> tips{};  // tips[t] adjacent to mids[t]
};

// First induced two-subdivided claw, or nullopt. Graphs above `cap`
// vertices are refused.
std::optional<SubdivisionWitness> find_subdivided_k13(const BipartiteGraph& g,
                                                      int cap = 60);

}  // namespace licol
