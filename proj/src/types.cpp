#include "licol/types.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace licol {

std::vector<int> colors_of(ColorMask m) {
  std::vector<int> out;
  for (int c = 1; m != 0; ++c, m >>= 1) {
    if (m & 1) out.push_back(c);
  }
  return out;
}

ColorMask mask_of(const std::vector<int>& colors) {
  ColorMask m = 0;
  for (int c : colors) m |= color_bit(c);
  return m;
}

TargetGraph TargetGraph::complete(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int c1 = 1; c1 <= k; ++c1)
    for (int c2 = c1 + 1; c2 <= k; ++c2) edges.emplace_back(c1, c2);
  return make(k, std::move(edges), {});
}

TargetGraph TargetGraph::make(int order, std::vector<std::pair<int, int>> edges,
                              std::vector<int> loops) {
  if (order < 0 || order > kMaxColors)
    throw std::invalid_argument("target order out of supported range");
  TargetGraph h;
  h.order = order;
  for (auto& [c1, c2] : edges) {
    if (c1 == c2) throw std::invalid_argument("loop listed as edge");
    if (c1 > c2) std::swap(c1, c2);
    if (c1 < 1 || c2 > order)
      throw std::invalid_argument("edge references color outside 1..order");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge in target");
  std::sort(loops.begin(), loops.end());
  loops.erase(std::unique(loops.begin(), loops.end()), loops.end());
  for (int c : loops)
    if (c < 1 || c > order)
      throw std::invalid_argument("loop references color outside 1..order");
  h.edges = std::move(edges);
  h.loops = std::move(loops);
  h.adj.assign(order, 0);
  for (auto [c1, c2] : h.edges) {
    h.adj[c1 - 1] |= color_bit(c2);
    h.adj[c2 - 1] |= color_bit(c1);
  }
  for (int c : h.loops) h.adj[c - 1] |= color_bit(c);
  return h;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.field;
    if (v.index > 0) os << "[" << v.index << "]";
    os << ": " << v.message << "\n";
  }
  return os.str();
}

ValidationReport validate_instance(const ConvexInstance& inst) {
  ValidationReport rep;
  auto add = [&rep](std::string field, int index, std::string msg) {
    rep.violations.push_back({std::move(field), index, std::move(msg)});
  };
  if (inst.k < 1) add("k", 0, "color count must be positive");
  if (inst.k > kMaxColors) add("k", 0, "color count exceeds supported limit");
  if (inst.n() < 1) add("x_lists", 0, "at least one X-vertex required");
  if (inst.k >= 1 && inst.k <= kMaxColors) {
    const ColorMask universe = full_mask(inst.k);
    for (int i = 0; i < inst.n(); ++i) {
      if ((inst.x_lists[i] & ~universe) != 0)
        add("x_lists", i + 1, "list contains a color outside 1..k");
    }
    for (int j = 0; j < inst.y_count(); ++j) {
      if ((inst.ys[j].list & ~universe) != 0)
        add("y", j + 1, "list contains a color outside 1..k");
    }
  }
  for (int j = 0; j < inst.y_count(); ++j) {
    const auto& y = inst.ys[j];
    if (y.a > y.b) add("y", j + 1, "interval reversed (a > b)");
    if (y.a < 1 || y.b > inst.n())
      add("y", j + 1, "interval endpoint outside 1..n");
  }
  return rep;
}

bool verify_coloring(const ConvexInstance& inst, const TargetGraph& h,
                     const Coloring& col) {
  if (static_cast<int>(col.x.size()) != inst.n() ||
      static_cast<int>(col.y.size()) != inst.y_count())
    throw std::invalid_argument("coloring dimensions do not match instance");
  auto in_range = [&h](int c) { return c >= 1 && c <= h.order; };
  for (int i = 0; i < inst.n(); ++i) {
    if (!in_range(col.x[i]) || !has_color(inst.x_lists[i], col.x[i]))
      return false;
  }
  for (int j = 0; j < inst.y_count(); ++j) {
    const auto& y = inst.ys[j];
    const int cy = col.y[j];
    if (!in_range(cy) || !has_color(y.list, cy)) return false;
    for (int i = y.a; i <= y.b; ++i) {
      if (!h.adjacent(col.x[i - 1], cy)) return false;
    }
  }
  return true;
}

BipartiteGraph to_bipartite_graph(const ConvexInstance& inst) {
  BipartiteGraph g;
  g.x_count = inst.n();
  g.y_adj.reserve(inst.ys.size());
  for (const auto& y : inst.ys) {
    std::vector<int> nbrs;
    nbrs.reserve(y.b - y.a + 1);
    for (int i = y.a; i <= y.b; ++i) nbrs.push_back(i);
    g.y_adj.push_back(std::move(nbrs));
  }
  return g;
}

}  // namespace licol
