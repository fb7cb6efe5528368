#include "licol/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "licol/frontier.hpp"
#include "licol/gen.hpp"
#include "licol/oracle.hpp"

namespace licol {

BenchAlgo parse_bench_algo(const std::string& name) {
  if (name == "frontier") return BenchAlgo::frontier;
  if (name == "color-dp") return BenchAlgo::color_dp;
  if (name == "brute") return BenchAlgo::brute;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string bench_algo_name(BenchAlgo algo) {
  switch (algo) {
    case BenchAlgo::frontier: return "frontier";
    case BenchAlgo::color_dp: return "color-dp";
    case BenchAlgo::brute: return "brute";
  }
  return "?";
}

std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int k,
                                BenchAlgo algo, StepVariant variant,
                                std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    BenchRow row;
    row.size = n;
    row.y_count = n / 2;
    const ConvexInstance inst =
        gen_convex_instance(seed + static_cast<std::uint64_t>(n), n,
                            row.y_count, k, 0.6);
    const TargetGraph h = TargetGraph::complete(k);

    bool yes = false;
    std::vector<double> times;
    try {
      for (int run = 0; run < 5; ++run) {
        const auto t0 = std::chrono::steady_clock::now();
        switch (algo) {
          case BenchAlgo::frontier:
            yes = solve_frontier(inst, h).yes;
            break;
          case BenchAlgo::color_dp:
            yes = solve_color_dp(inst, variant).yes;
            break;
          case BenchAlgo::brute:
            yes = brute_force_solve(inst, h).yes;
            break;
        }
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(
            std::chrono::duration<double, std::milli>(t1 - t0).count());
      }
    } catch (const CapExceeded&) {
      row.decision = "REFUSED";
      rows.push_back(row);
      continue;
    }
    std::sort(times.begin(), times.end());
    row.millis = times[times.size() / 2];
    row.decision = yes ? "YES" : "NO";

    switch (algo) {
      case BenchAlgo::frontier: {
        const auto census = state_census(inst, h);
        row.states = std::accumulate(census.begin(), census.end(),
                                     std::uint64_t{0});
        break;
      }
      case BenchAlgo::color_dp: {
        const BlockStructure blocks = compute_blocks(inst);
        for (const auto& st : blocks.stages)
          row.states += st.expanded_breakpoints.size()
                        << static_cast<std::uint64_t>(k);
        break;
      }
      case BenchAlgo::brute:
        row.states = 0;
        break;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "size,states,millis\n";
  for (const auto& row : rows) {
    os << row.size << ",";
    if (row.decision == "REFUSED") {
      os << ",\n";
    } else {
      os << row.states << "," << row.millis << "\n";
    }
  }
  return os.str();
}

std::string bench_json(const std::vector<BenchRow>& rows, int k, BenchAlgo algo,
                       std::uint64_t seed) {
  nlohmann::ordered_json doc;
  doc["command"] = "bench";
  doc["algo"] = bench_algo_name(algo);
  doc["k"] = k;
  doc["seed"] = seed;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json entry;
    entry["size"] = row.size;
    entry["y_count"] = row.y_count;
    entry["states"] = row.states;
    entry["decision"] = row.decision;
    arr.push_back(std::move(entry));
  }
  doc["rows"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string bench_text(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "size\tstates\tmillis\tdecision\n";
  for (const auto& row : rows)
    os << row.size << "\t" << row.states << "\t" << row.millis << "\t"
       << row.decision << "\n";
  return os.str();
}

}  // namespace licol
