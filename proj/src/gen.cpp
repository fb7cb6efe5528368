#include "licol/gen.hpp"

#include <algorithm>

#include "licol/orderings.hpp"

namespace licol {

namespace {

void check_params(int n, int y_count, int k, double density) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (y_count < 0) throw std::invalid_argument("y count must be non-negative");
  if (k < 1 || k > kMaxColors)
    throw std::invalid_argument("k out of supported range");
  if (!(density > 0.0) || density > 1.0)
    throw std::invalid_argument("density must be in (0,1]");
}

ColorMask draw_list(SplitMix64& rng, int k, double density) {
  ColorMask m = 0;
  for (int c = 1; c <= k; ++c)
    if (rng.chance(density)) m |= color_bit(c);
  return m;
}

// Decode a rank in [0, n(n+1)/2) to the interval [a, b], ordered by a then b.
YVertex decode_interval(std::uint64_t rank, int n) {
  int a = 1;
  std::uint64_t remaining = rank;
  while (remaining >= static_cast<std::uint64_t>(n - a + 1)) {
    remaining -= n - a + 1;
    ++a;
  }
  YVertex y;
  y.a = a;
  y.b = a + static_cast<int>(remaining);
  return y;
}

constexpr int kBiconvexRetryLimit = 1000;

}  // namespace

ConvexInstance gen_convex_instance(std::uint64_t seed, int n, int y_count,
                                   int k, double density) {
  check_params(n, y_count, k, density);
  SplitMix64 rng(seed);
  ConvexInstance inst;
  inst.k = k;
  inst.gen = kGeneratorVersion;
  inst.x_lists.reserve(n);
  for (int i = 0; i < n; ++i) inst.x_lists.push_back(draw_list(rng, k, density));
  const std::uint64_t intervals =
      static_cast<std::uint64_t>(n) * (n + 1) / 2;
  inst.ys.reserve(y_count);
  for (int j = 0; j < y_count; ++j) {
    YVertex y = decode_interval(rng.below(intervals), n);
    y.list = draw_list(rng, k, density);
    inst.ys.push_back(y);
  }
  return inst;
}

BiconvexInstance gen_biconvex_instance(std::uint64_t seed, int n, int m, int k,
                                       double density) {
  check_params(n, m, k, density);
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kBiconvexRetryLimit; ++attempt) {
    std::vector<int> as(m), bs(m);
    for (int j = 0; j < m; ++j) as[j] = 1 + static_cast<int>(rng.below(n));
    for (int j = 0; j < m; ++j) bs[j] = 1 + static_cast<int>(rng.below(n));
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());

    ConvexInstance inst;
    inst.k = k;
    inst.gen = kGeneratorVersion;
    for (int j = 0; j < m; ++j)
      inst.ys.push_back({as[j], std::max(as[j], bs[j]), 0});
    std::sort(inst.ys.begin(), inst.ys.end(),
              [](const YVertex& l, const YVertex& r) {
                return std::pair(l.a, l.b) < std::pair(r.a, r.b);
              });
    inst.x_lists.assign(n, 0);

    std::vector<int> identity_x(n), identity_y(m);
    for (int i = 0; i < n; ++i) identity_x[i] = i + 1;
    for (int j = 0; j < m; ++j) identity_y[j] = j + 1;
    if (!verify_biconvex(to_bipartite_graph(inst), identity_x, identity_y))
      continue;

    for (int i = 0; i < n; ++i) inst.x_lists[i] = draw_list(rng, k, density);
    for (auto& y : inst.ys) y.list = draw_list(rng, k, density);
    return {std::move(inst), std::move(identity_y)};
  }
  throw GenError("biconvex construction exhausted retries for seed " +
                 std::to_string(seed));
}

TargetGraph gen_target(std::uint64_t seed, int order, double edge_density,
                       double loop_density) {
  if (order < 1 || order > kMaxColors)
    throw std::invalid_argument("order out of supported range");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int c1 = 1; c1 <= order; ++c1)
    for (int c2 = c1 + 1; c2 <= order; ++c2)
      if (rng.chance(edge_density)) edges.emplace_back(c1, c2);
  std::vector<int> loops;
  for (int c = 1; c <= order; ++c)
    if (rng.chance(loop_density)) loops.push_back(c);
  return TargetGraph::make(order, std::move(edges), std::move(loops));
}

}  // namespace licol
