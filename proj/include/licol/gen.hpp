#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "licol/types.hpp"

namespace licol {

// Fixtures depend on the exact pseudo-random sequence, so it is part of the
// external contract and versioned: splitmix64 with increment
// 0x9E3779B97F4A7C15 and mixing constants 0xBF58476D1CE4E5B9,
// 0x94D049BB133111EB; bounded draws take next() modulo the bound; biased
// coin draws compare the top 53 bits against p * 2^53.
inline constexpr char kGeneratorVersion[] = "licol-gen/1";

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  bool chance(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return (next() >> 11) < static_cast<std::uint64_t>(p * 9007199254740992.0);
  }
};

struct GenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform over all n(n+1)/2 intervals; every list keeps each color
// independently with probability `density` (empty lists allowed).
ConvexInstance gen_convex_instance(std::uint64_t seed, int n, int y_count,
                                   int k, double density);

struct BiconvexInstance {
  ConvexInstance inst;
  std::vector<int> y_order;  // certificate, 1-based Y indices
};

// Sorted-interval construction: both endpoint sequences are drawn, sorted
// and paired, which makes the (a, b)-sorted family biconvex under identity
// orders; the result is still verified and retried, and a seed that
// exhausts the retry budget raises GenError.
BiconvexInstance gen_biconvex_instance(std::uint64_t seed, int n, int m, int k,
                                       double density);

TargetGraph gen_target(std::uint64_t seed, int order, double edge_density,
                       double loop_density);

}  // namespace licol
