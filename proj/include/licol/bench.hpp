#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "licol/color_dp.hpp"

namespace licol {

enum class BenchAlgo { frontier, color_dp, brute };

BenchAlgo parse_bench_algo(const std::string& name);
std::string bench_algo_name(BenchAlgo algo);

struct BenchRow {
  int size = 0;
  int y_count = 0;
  std::uint64_t states = 0;  // deterministic work measure per solver
  double millis = 0.0;       // median of five timed runs
  std::string decision;      // YES, NO or REFUSED
};

// One seeded instance per size (y count n/2, density 0.6). The `states`
// column is deterministic across reruns; wall times are not and stay out
// of the JSON rendering.
std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int k,
                                BenchAlgo algo,
                                StepVariant variant = StepVariant::pseudocode_and,
                                std::uint64_t seed = 1);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows, int k, BenchAlgo algo,
                       std::uint64_t seed);
std::string bench_text(const std::vector<BenchRow>& rows);

}  // namespace licol
