#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace licol {

// Colors are 1-based; bit c-1 of a mask stands for color c.
using ColorMask = std::uint64_t;

constexpr int kMaxColors = 62;

constexpr ColorMask full_mask(int k) { return (ColorMask{1} << k) - 1; }
constexpr ColorMask color_bit(int c) { return ColorMask{1} << (c - 1); }
constexpr bool has_color(ColorMask m, int c) { return (m & color_bit(c)) != 0; }

std::vector<int> colors_of(ColorMask m);
ColorMask mask_of(const std::vector<int>& colors);

// A Y-vertex of a convex instance: neighborhood {x_a, ..., x_b} plus its list.
struct YVertex {
  int a = 0;
  int b = 0;
  ColorMask list = 0;

  bool operator==(const YVertex&) const = default;
};

// List coloring instance over a convex bipartite graph. X-vertices are
// identified by position 1..n of the convex ordering; Y-vertices keep their
// input order.
struct ConvexInstance {
  int k = 0;
  std::vector<ColorMask> x_lists;
  std::vector<YVertex> ys;
  std::string gen;  // generator version tag, empty unless machine-produced

  int n() const { return static_cast<int>(x_lists.size()); }
  int y_count() const { return static_cast<int>(ys.size()); }

  bool operator==(const ConvexInstance&) const = default;
};

// Homomorphism target over colors 1..order. `adj[c-1]` holds the mask of
// colors compatible with c, including c itself exactly when c has a loop.
struct TargetGraph {
  int order = 0;
  std::vector<std::pair<int, int>> edges;  // normalized: first < second, sorted
  std::vector<int> loops;                  // sorted, unique
  std::vector<ColorMask> adj;

  bool adjacent(int c1, int c2) const { return has_color(adj[c1 - 1], c2); }
  ColorMask compatible_with(int c) const { return adj[c - 1]; }

  static TargetGraph complete(int k);
  static TargetGraph make(int order, std::vector<std::pair<int, int>> edges,
                          std::vector<int> loops);

  bool operator==(const TargetGraph&) const = default;
};

struct Coloring {
  std::vector<int> x;
  std::vector<int> y;

  bool operator==(const Coloring&) const = default;
};

// Plain bipartite graph; y_adj holds sorted 1-based X indices per Y-vertex.
struct BipartiteGraph {
  int x_count = 0;
  std::vector<std::vector<int>> y_adj;

  int y_count() const { return static_cast<int>(y_adj.size()); }

  bool operator==(const BipartiteGraph&) const = default;
};

struct Violation {
  std::string field;
  int index = 0;  // 1-based position within the field, 0 if not indexed
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate_instance(const ConvexInstance& inst);

// True iff `col` maps every vertex into its list and every edge of the
// instance onto an edge of `h`. Dimension mismatches throw.
bool verify_coloring(const ConvexInstance& inst, const TargetGraph& h,
                     const Coloring& col);

BipartiteGraph to_bipartite_graph(const ConvexInstance& inst);

}  // namespace licol
