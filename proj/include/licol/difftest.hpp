#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "licol/color_dp.hpp"
#include "licol/types.hpp"

namespace licol {

struct HSpec {
  enum class Kind { complete, random };
  Kind kind = Kind::complete;
  int order = 3;  // complete: exact order; random: maximal order
  double edge_density = 0.5;
  double loop_density = 0.25;
};

struct DifftestParams {
  int count = 0;
  std::uint64_t seed = 0;
  int max_n = 6;
  int max_y = 3;
  int k = 3;
  HSpec h;
  std::string out_dir;  // counterexample fixtures land here; empty = no files
};

struct Disagreement {
  int index = 0;
  ConvexInstance inst;
  TargetGraph target;
  std::map<std::string, std::string> decisions;
  std::vector<std::string> files;
};

struct DifftestReport {
  DifftestParams params;
  int cases = 0;
  // per solver: {cases agreeing with brute force, cases compared}
  std::map<std::string, std::pair<int, int>> agreement;
  std::vector<Disagreement> disagreements;
  bool certificates_ok = true;
  bool frontier_brute_ok = true;

  bool ok() const { return frontier_brute_ok && certificates_ok; }
};

// Random instances within the oracle caps; every solver's decision is
// compared against brute force. The frontier-vs-brute pair is the gate;
// other disagreements are recorded and serialized, never fatal.
DifftestReport run_difftest(const DifftestParams& params);

std::string difftest_report_json(const DifftestReport& report);
std::string difftest_report_text(const DifftestReport& report);

struct SweepReport {
  std::uint64_t cases = 0;
  std::uint64_t frontier_brute_agree = 0;
  std::map<std::string, std::uint64_t> color_dp_disagreements;

  bool ok() const { return frontier_brute_agree == cases; }
};

// Every instance with n <= max_n, y-count <= max_y and every combination
// of X-lists, Y-intervals and Y-lists over k colors, compared against
// brute force.
SweepReport exhaustive_sweep(int max_n, int max_y, int k,
                             bool with_color_dp = true);

}  // namespace licol
