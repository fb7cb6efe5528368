#pragma once

#include <string>
#include <vector>

#include "licol/types.hpp"

namespace licol {

// Selects how the second update of Step 2 propagates truth values between
// neighbouring segments. The three published descriptions of this step are
// mutually inconsistent, so the rule is part of the public API:
//   off             no propagation (reproduces the reference trace tables)
//   pseudocode_and  cell(i,S) &= cell(i-1,S), left to right
//   prose_superset  cell(i,S) survives iff some cell(i-1,S') with S' >= S
enum class StepVariant { off, pseudocode_and, prose_superset };

StepVariant parse_variant(const std::string& name);  // throws on unknown name
std::string variant_name(StepVariant v);

// One sweep stage of the block decomposition: all Y-vertices sharing the
// same right endpoint b, plus the breakpoint sets driving the table layout.
struct Stage {
  int b = 0;
  std::vector<int> new_ys;      // input indices of Y with b_y == b
  std::vector<int> z_ys;        // input indices of Y crossing this stage
  std::vector<int> breakpoints;           // A(j), last entry == b
  std::vector<int> expanded_breakpoints;  // A'(j), superset of A(j)
  bool sentinel = false;        // padding stage for uncovered X-suffixes
};

struct BlockStructure {
  ConvexInstance inst;          // Y-vertices kept in input order
  std::vector<int> b_values;    // distinct right endpoints, ascending
  std::vector<Stage> stages;    // b_values stages, plus one sentinel if the
                                // last b is below n or Y is empty
  int stage_count() const { return static_cast<int>(stages.size()); }
};

BlockStructure compute_blocks(const ConvexInstance& inst);

// Boolean table of one sweep stage. Rows are the X-segments
// [starts[r], starts[r+1]) (the final row ends at `end`, exclusive);
// columns are the proper subsets S of the color set, indexed by mask.
// cell(r,S) tracks "a valid partial coloring exists that avoids the colors
// of S on row r's segment". The slot for the full color set is kept false
// and never read.
struct SegmentTable {
  int k = 0;
  std::vector<int> starts;
  int end = 0;
  std::vector<std::vector<std::uint8_t>> cells;

  int row_count() const { return static_cast<int>(starts.size()); }
  int segment_end(int row) const {  // exclusive
    return row + 1 < row_count() ? starts[row + 1] : end;
  }
  bool cell(int row, ColorMask s) const { return cells[row][s] != 0; }
};

// H-coloring counterpart: columns are all subsets U of V(H); cell(r,U)
// tracks "a valid partial coloring exists whose colors on row r's segment
// all lie in U".
struct UsedSetTable {
  int order = 0;
  std::vector<int> starts;
  int end = 0;
  std::vector<std::vector<std::uint8_t>> cells;

  int row_count() const { return static_cast<int>(starts.size()); }
  bool cell(int row, ColorMask u) const { return cells[row][u] != 0; }
};

// Step 1: expand the previous compacted table to the breakpoints of A'(j);
// new rows become true iff every list in the segment keeps a color outside
// S, and the boundary row is re-ANDed with the same condition over its
// extension. Pass a default-constructed table as `prev` for j == 1.
SegmentTable step1_extend(const SegmentTable& prev, const BlockStructure& blocks,
                          int j);

// Step 2, first update: kill every cell whose avoid-set is disjoint from
// L(y) on segments starting inside [a_y, b_y].
void step2a_filter(SegmentTable& table, const BlockStructure& blocks, int j,
                   int y_index);

// Step 2, second update: propagate along segments starting inside
// (a_y, b_y], per the selected variant.
void step2b_propagate(SegmentTable& table, const BlockStructure& blocks, int j,
                      int y_index, StepVariant variant);

// Step 3: fuse the expanded rows down to the breakpoints of A(j). Folding
// row q into an accumulated row keeps cell(S) true iff there are S1, S2
// with S ⊆ S1 ∩ S2 and acc(S1), q(S2) both true. Rows left of the first
// retained breakpoint fold into the first output row.
SegmentTable step3_compact(const SegmentTable& table, const BlockStructure& blocks,
                           int j);

// Observer invoked by the solvers after each phase of each stage; used by
// the trace machinery. `step` is one of "1", "2a", "2b", "3".
struct TraceSink {
  virtual ~TraceSink() = default;
  virtual void on_step(int j, const std::string& step, const SegmentTable& t) = 0;
};

struct ColorDpResult {
  bool yes = false;
  StepVariant variant = StepVariant::off;
  SegmentTable final_table;
};

ColorDpResult solve_color_dp(const ConvexInstance& inst, StepVariant variant,
                             TraceSink* sink = nullptr);

struct UsedSetResult {
  bool yes = false;
  StepVariant variant = StepVariant::off;
  UsedSetTable final_table;
};

// Used-color-set variant of the same sweep, deciding list H-coloring.
// Requires h.order == inst.k.
UsedSetResult solve_hcol_usedset(const ConvexInstance& inst, const TargetGraph& h,
                                 StepVariant variant);

struct TraceSnapshot {
  int j = 0;
  std::string step;
  SegmentTable table;
};

// Table snapshot after `step` of stage j under `variant` (default `off`,
// which matches the bundled golden tables). Stage indices run over the
// non-sentinel stages; an instance without Y-vertices yields one empty
// trace at j == 1.
TraceSnapshot trace_tables(const ConvexInstance& inst, int j,
                           const std::string& step,
                           StepVariant variant = StepVariant::off);

// Column order used by every rendering: ascending subset size, then
// lexicographic on the sorted color sequence, with the empty set last.
std::vector<ColorMask> trace_columns(int k);

std::string trace_snapshot_json(const TraceSnapshot& snap);
std::string trace_snapshot_text(const TraceSnapshot& snap);

}  // namespace licol
