#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "fixtures.hpp"
#include "licol/gen.hpp"
#include "licol/json_io.hpp"
#include "licol/orderings.hpp"

using namespace licol;
using namespace licol::tests;

TEST_CASE("convex generation is deterministic and valid") {
  const ConvexInstance a = gen_convex_instance(42, 9, 5, 3, 0.6);
  const ConvexInstance b = gen_convex_instance(42, 9, 5, 3, 0.6);
  CHECK(a == b);
  CHECK(a.gen == kGeneratorVersion);
  CHECK(validate_instance(a).ok());
  CHECK_FALSE(a == gen_convex_instance(43, 9, 5, 3, 0.6));

  SplitMix64 rng(1);
  for (int round = 0; round < 100; ++round) {
    const ConvexInstance inst = gen_convex_instance(
        rng.next(), 1 + static_cast<int>(rng.below(20)),
        static_cast<int>(rng.below(10)), 1 + static_cast<int>(rng.below(4)),
        0.01 + 0.99 * static_cast<double>(rng.below(100)) / 100.0);
    CHECK(validate_instance(inst).ok());
  }
  CHECK_THROWS_AS(gen_convex_instance(1, 0, 1, 3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gen_convex_instance(1, 5, 1, 3, 0.0), std::invalid_argument);
}

TEST_CASE("the frozen generator fixture is stable") {
  const std::string bytes = read_file(test_data_path("gen_seed1_n8.json"));
  CHECK(serialize_instance(gen_convex_instance(1, 8, 4, 3, 0.6)) == bytes);
}

TEST_CASE("biconvex generation certifies itself") {
  SplitMix64 rng(2);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng.below(19));
    const int m = 1 + static_cast<int>(rng.below(10));
    const BiconvexInstance result =
        gen_biconvex_instance(rng.next(), n, m, 3, 0.5);
    CHECK(validate_instance(result.inst).ok());
    std::vector<int> identity_x(n);
    std::iota(identity_x.begin(), identity_x.end(), 1);
    CHECK(verify_biconvex(to_bipartite_graph(result.inst), identity_x,
                          result.y_order));
  }
  const BiconvexInstance a = gen_biconvex_instance(5, 10, 4, 2, 0.5);
  const BiconvexInstance b = gen_biconvex_instance(5, 10, 4, 2, 0.5);
  CHECK(a.inst == b.inst);
  CHECK(a.y_order == b.y_order);
}

TEST_CASE("target generation") {
  const TargetGraph complete = gen_target(3, 4, 1.0, 0.0);
  CHECK(complete == TargetGraph::complete(4));
  const TargetGraph empty = gen_target(3, 4, 0.0, 0.0);
  CHECK(empty.edges.empty());
  CHECK(empty.loops.empty());
  CHECK(gen_target(9, 5, 0.5, 0.5) == gen_target(9, 5, 0.5, 0.5));
  const TargetGraph loopy = gen_target(3, 4, 0.0, 1.0);
  CHECK(loopy.loops == std::vector<int>{1, 2, 3, 4});
  CHECK(loopy.adjacent(2, 2));
}
