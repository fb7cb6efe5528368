#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "licol/gen.hpp"
#include "licol/oracle.hpp"

using namespace licol;
using namespace licol::tests;

TEST_CASE("reference instance is a YES with a checkable witness") {
  const ConvexInstance inst = reference_instance();
  const TargetGraph k3 = TargetGraph::complete(3);
  const OracleResult res = brute_force_solve(inst, k3);
  REQUIRE(res.yes);
  CHECK(verify_coloring(inst, k3, *res.certificate));
  // the hand-checked witness is also accepted
  CHECK(verify_coloring(inst, k3, reference_witness()));
}

TEST_CASE("single edge with clashing singleton lists") {
  ConvexInstance inst;
  inst.k = 3;
  inst.x_lists = {mask_of({1})};
  inst.ys = {{1, 1, mask_of({1})}};
  CHECK_FALSE(brute_force_solve(inst, TargetGraph::complete(3)).yes);
}

TEST_CASE("an isolated X with an empty list blocks everything") {
  BipartiteGraph g;
  g.x_count = 2;
  g.y_adj = {{1}};
  const std::vector<ColorMask> x_lists = {mask_of({1, 2}), 0};
  const std::vector<ColorMask> y_lists = {mask_of({1, 2})};
  CHECK_FALSE(
      brute_force_solve(g, x_lists, y_lists, TargetGraph::complete(2)).yes);
}

TEST_CASE("the oracle refuses instead of truncating") {
  BipartiteGraph g;
  g.x_count = 25;
  const std::vector<ColorMask> x_lists(25, mask_of({1}));
  CHECK_THROWS_AS(
      brute_force_solve(g, x_lists, {}, TargetGraph::complete(1), 24),
      CapExceeded);
}

TEST_CASE("decisions ignore the Y input order") {
  SplitMix64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const ConvexInstance inst = gen_convex_instance(
        rng.next(), 1 + static_cast<int>(rng.below(6)),
        static_cast<int>(rng.below(5)), 3, 0.5);
    const TargetGraph k3 = TargetGraph::complete(3);
    ConvexInstance shuffled = inst;
    for (int t = static_cast<int>(shuffled.ys.size()) - 1; t > 0; --t)
      std::swap(shuffled.ys[t], shuffled.ys[rng.below(t + 1)]);
    CHECK(brute_force_solve(inst, k3).yes ==
          brute_force_solve(shuffled, k3).yes);
  }
}

TEST_CASE("convex ordering search") {
  CHECK(find_convex_ordering_bruteforce(corner_graph()) ==
        std::vector<int>{1, 2, 3, 4, 5, 6, 7});

  // bipartite C6: pairwise-overlapping neighborhoods in a cycle
  BipartiteGraph c6;
  c6.x_count = 3;
  c6.y_adj = {{1, 2}, {2, 3}, {1, 3}};
  CHECK_FALSE(find_convex_ordering_bruteforce(c6).has_value());

  BipartiteGraph single;
  single.x_count = 3;
  single.y_adj = {{1, 2}};
  CHECK(find_convex_ordering_bruteforce(single) == std::vector<int>{1, 2, 3});

  BipartiteGraph big;
  big.x_count = 10;
  CHECK_THROWS_AS(find_convex_ordering_bruteforce(big), CapExceeded);
}

TEST_CASE("found orderings re-verify as consecutive") {
  SplitMix64 rng(12);
  int found = 0;
  for (int round = 0; round < 120; ++round) {
    BipartiteGraph g;
    g.x_count = 2 + static_cast<int>(rng.below(4));
    const int y_count = 1 + static_cast<int>(rng.below(3));
    for (int j = 0; j < y_count; ++j) {
      std::vector<int> nbrs;
      for (int xi = 1; xi <= g.x_count; ++xi)
        if (rng.chance(0.5)) nbrs.push_back(xi);
      if (nbrs.empty()) nbrs.push_back(1);
      g.y_adj.push_back(std::move(nbrs));
    }
    const auto order = find_convex_ordering_bruteforce(g);
    if (!order) continue;
    ++found;
    std::vector<int> pos(g.x_count + 1);
    for (int t = 0; t < g.x_count; ++t) pos[(*order)[t]] = t;
    for (const auto& nbrs : g.y_adj) {
      int lo = g.x_count, hi = -1;
      for (int xi : nbrs) {
        lo = std::min(lo, pos[xi]);
        hi = std::max(hi, pos[xi]);
      }
      CHECK(hi - lo + 1 == static_cast<int>(nbrs.size()));
    }
  }
  CHECK(found > 0);
}
