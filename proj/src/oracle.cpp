#include "licol/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace licol {

namespace {

struct Backtracker {
  const BipartiteGraph& g;
  const std::vector<ColorMask>& x_lists;
  const std::vector<ColorMask>& y_lists;
  const TargetGraph& h;
  std::vector<ColorMask> feasible;  // per X, colors still usable
  std::vector<int> y_color;

  bool assign(std::size_t yi) {
    if (yi == g.y_adj.size()) {
      for (ColorMask f : feasible)
        if (f == 0) return false;
      return true;
    }
    for (int c : colors_of(y_lists[yi])) {
      std::vector<ColorMask> saved;
      saved.reserve(g.y_adj[yi].size());
      bool dead = false;
      for (int xi : g.y_adj[yi]) {
        saved.push_back(feasible[xi - 1]);
        feasible[xi - 1] &= h.adj[c - 1];
        if (feasible[xi - 1] == 0) dead = true;
      }
      if (!dead) {
        y_color[yi] = c;
        if (assign(yi + 1)) return true;
      }
      for (std::size_t t = 0; t < saved.size(); ++t)
        feasible[g.y_adj[yi][t] - 1] = saved[t];
    }
    return false;
  }
};

}  // namespace

OracleResult brute_force_solve(const BipartiteGraph& g,
                               const std::vector<ColorMask>& x_lists,
                               const std::vector<ColorMask>& y_lists,
                               const TargetGraph& h, int cap) {
  if (g.x_count + g.y_count() > cap)
    throw CapExceeded("brute force refused: instance above " +
                      std::to_string(cap) + " vertices");
  if (static_cast<int>(x_lists.size()) != g.x_count ||
      y_lists.size() != g.y_adj.size())
    throw std::invalid_argument("list dimensions do not match graph");
  const ColorMask universe = full_mask(h.order);
  for (ColorMask m : x_lists)
    if ((m & ~universe) != 0)
      throw std::invalid_argument("X-list color outside the target");
  for (ColorMask m : y_lists)
    if ((m & ~universe) != 0)
      throw std::invalid_argument("Y-list color outside the target");

  Backtracker bt{g, x_lists, y_lists, h, x_lists,
                 std::vector<int>(g.y_adj.size(), 0)};
  OracleResult res;
  res.yes = bt.assign(0);
  if (res.yes) {
    Coloring col;
    col.y = bt.y_color;
    col.x.reserve(g.x_count);
    for (ColorMask f : bt.feasible) col.x.push_back(colors_of(f).front());
    res.certificate = std::move(col);
  }
  return res;
}

OracleResult brute_force_solve(const ConvexInstance& inst, const TargetGraph& h,
                               int cap) {
  std::vector<ColorMask> y_lists;
  y_lists.reserve(inst.ys.size());
  for (const auto& y : inst.ys) y_lists.push_back(y.list);
  return brute_force_solve(to_bipartite_graph(inst), inst.x_lists, y_lists, h,
                           cap);
}

std::optional<std::vector<int>> find_convex_ordering_bruteforce(
    const BipartiteGraph& g, int cap) {
  if (g.x_count > cap)
    throw CapExceeded("ordering search refused: more than " +
                      std::to_string(cap) + " X-vertices");
  std::vector<int> perm(g.x_count);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> position(g.x_count + 1, 0);
  do {
    for (int i = 0; i < g.x_count; ++i) position[perm[i]] = i;
    bool ok = true;
    for (const auto& nbrs : g.y_adj) {
      if (nbrs.empty()) continue;
      int lo = g.x_count, hi = -1;
      for (int xi : nbrs) {
        lo = std::min(lo, position[xi]);
        hi = std::max(hi, position[xi]);
      }
      if (hi - lo + 1 != static_cast<int>(nbrs.size())) {
        ok = false;
        break;
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace licol
