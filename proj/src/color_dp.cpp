#include "licol/color_dp.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace licol {

namespace {

using Row = std::vector<std::uint8_t>;

// Superset closure over subset columns: row[S] |= OR of row[S'] for S' ⊇ S.
// The full-set slot of a k-coloring table is permanently false, so the
// quantification effectively ranges over proper supersets.
void close_upward(Row& row, int k) {
  const std::size_t ncols = row.size();
  for (int b = 0; b < k; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < ncols; ++mask)
      if (!(mask & bit)) row[mask] |= row[mask | bit];
  }
}

// Subset closure: row[U] |= OR of row[U'] for U' ⊆ U.
void close_downward(Row& row, int k) {
  const std::size_t ncols = row.size();
  for (int b = 0; b < k; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < ncols; ++mask)
      if (mask & bit) row[mask] |= row[mask ^ bit];
  }
}

int find_breakpoint(const std::vector<int>& starts, int value) {
  auto it = std::lower_bound(starts.begin(), starts.end(), value);
  assert(it != starts.end() && *it == value);
  return static_cast<int>(it - starts.begin());
}

}  // namespace

StepVariant parse_variant(const std::string& name) {
  if (name == "off") return StepVariant::off;
  if (name == "pseudocode-and") return StepVariant::pseudocode_and;
  if (name == "prose-superset") return StepVariant::prose_superset;
  throw std::invalid_argument("unknown variant: " + name);
}

std::string variant_name(StepVariant v) {
  switch (v) {
    case StepVariant::off: return "off";
    case StepVariant::pseudocode_and: return "pseudocode-and";
    case StepVariant::prose_superset: return "prose-superset";
  }
  return "?";
}

BlockStructure compute_blocks(const ConvexInstance& inst) {
  if (auto rep = validate_instance(inst); !rep.ok())
    throw std::invalid_argument("invalid instance: " + rep.to_string());

  BlockStructure bs;
  bs.inst = inst;
  {
    std::set<int> bvals;
    for (const auto& y : inst.ys) bvals.insert(y.b);
    bs.b_values.assign(bvals.begin(), bvals.end());
  }

  int prev_b = 0;
  std::vector<int> prev_breakpoints;
  const bool covers_n = !bs.b_values.empty() && bs.b_values.back() == inst.n();
  const int total = static_cast<int>(bs.b_values.size()) + (covers_n ? 0 : 1);

  for (int j = 1; j <= total; ++j) {
    Stage st;
    st.sentinel = j > static_cast<int>(bs.b_values.size());
    st.b = st.sentinel ? inst.n() : bs.b_values[j - 1];

    if (!st.sentinel) {
      for (int yi = 0; yi < inst.y_count(); ++yi)
        if (inst.ys[yi].b == st.b) st.new_ys.push_back(yi);
      std::sort(st.new_ys.begin(), st.new_ys.end(), [&inst](int l, int r) {
        return std::pair(inst.ys[l].a, l) < std::pair(inst.ys[r].a, r);
      });
    }
    for (int yi = 0; yi < inst.y_count(); ++yi)
      if (inst.ys[yi].a <= st.b && st.b < inst.ys[yi].b) st.z_ys.push_back(yi);

    std::set<int> a_set;
    for (int yi : st.z_ys) a_set.insert(inst.ys[yi].a);
    a_set.insert(st.b);
    st.breakpoints.assign(a_set.begin(), a_set.end());

    std::set<int> ap_set(prev_breakpoints.begin(), prev_breakpoints.end());
    for (const auto& y : inst.ys)
      if (prev_b < y.a && y.a <= st.b) ap_set.insert(y.a);
    ap_set.insert(st.b);
    if (j == 1) ap_set.insert(1);  // initial breakpoint, so the X-prefix is covered
    st.expanded_breakpoints.assign(ap_set.begin(), ap_set.end());

    prev_b = st.b;
    prev_breakpoints = st.breakpoints;
    bs.stages.push_back(std::move(st));
  }
  return bs;
}

SegmentTable step1_extend(const SegmentTable& prev, const BlockStructure& blocks,
                          int j) {
  const Stage& st = blocks.stages.at(j - 1);
  const ConvexInstance& inst = blocks.inst;
  const int k = inst.k;
  const ColorMask full = full_mask(k);
  const std::size_t ncols = std::size_t{1} << k;

  SegmentTable t;
  t.k = k;
  t.starts = st.expanded_breakpoints;
  t.end = st.b + 1;
  t.cells.assign(t.row_count(), Row(ncols, 0));

  const int carried = prev.row_count();
  assert(std::equal(prev.starts.begin(), prev.starts.end(), t.starts.begin()));

  auto avoids_ok = [&inst](int from, int to_excl, ColorMask s) {
    for (int i = from; i < to_excl; ++i)
      if ((inst.x_lists[i - 1] & ~s) == 0) return false;
    return true;
  };

  for (int r = 0; r < carried; ++r) t.cells[r] = prev.cells[r];
  if (carried > 0) {
    // Boundary row: keep TRUE only where the extension also checks out.
    const int ext_from = prev.end;
    const int ext_to = t.segment_end(carried - 1);
    for (ColorMask s = 0; s < ncols; ++s)
      if (t.cells[carried - 1][s] && !avoids_ok(ext_from, ext_to, s))
        t.cells[carried - 1][s] = 0;
  }
  for (int r = carried; r < t.row_count(); ++r) {
    const int from = t.starts[r];
    const int to = t.segment_end(r);
    for (ColorMask s = 0; s < ncols; ++s)
      if (s != full) t.cells[r][s] = avoids_ok(from, to, s) ? 1 : 0;
  }
  return t;
}

void step2a_filter(SegmentTable& table, const BlockStructure& blocks, int j,
                   int y_index) {
  (void)j;
  const YVertex& y = blocks.inst.ys.at(y_index);
  const std::size_t ncols = std::size_t{1} << table.k;
  for (int r = 0; r < table.row_count(); ++r) {
    if (table.starts[r] < y.a || table.starts[r] > y.b) continue;
    for (ColorMask s = 0; s < ncols; ++s)
      if ((s & y.list) == 0) table.cells[r][s] = 0;
  }
}

void step2b_propagate(SegmentTable& table, const BlockStructure& blocks, int j,
                      int y_index, StepVariant variant) {
  (void)j;
  if (variant == StepVariant::off) return;
  const YVertex& y = blocks.inst.ys.at(y_index);
  const std::size_t ncols = std::size_t{1} << table.k;
  for (int r = 1; r < table.row_count(); ++r) {
    if (table.starts[r] <= y.a || table.starts[r] > y.b) continue;
    if (variant == StepVariant::pseudocode_and) {
      for (ColorMask s = 0; s < ncols; ++s)
        table.cells[r][s] &= table.cells[r - 1][s];
    } else {
      Row up = table.cells[r - 1];
      close_upward(up, table.k);
      for (ColorMask s = 0; s < ncols; ++s) table.cells[r][s] &= up[s];
    }
  }
}

SegmentTable step3_compact(const SegmentTable& table, const BlockStructure& blocks,
                           int j) {
  const Stage& st = blocks.stages.at(j - 1);
  const std::size_t ncols = std::size_t{1} << table.k;

  SegmentTable out;
  out.k = table.k;
  out.starts = st.breakpoints;
  out.end = st.b + 1;
  out.cells.assign(out.row_count(), Row(ncols, 0));

  for (int i = 0; i < out.row_count(); ++i) {
    const int f_i = find_breakpoint(table.starts, out.starts[i]);
    const int f_next = i + 1 < out.row_count()
                           ? find_breakpoint(table.starts, out.starts[i + 1])
                           : table.row_count();
    Row acc = table.cells[f_i];
    bool closed = false;
    auto fold_in = [&](const Row& other) {
      if (!closed) {
        close_upward(acc, table.k);
        closed = true;
      }
      Row up = other;
      close_upward(up, table.k);
      for (std::size_t s = 0; s < ncols; ++s) acc[s] &= up[s];
    };
    for (int q = f_i + 1; q < f_next; ++q) fold_in(table.cells[q]);
    if (i == 0)
      for (int q = 0; q < f_i; ++q) fold_in(table.cells[q]);
    out.cells[i] = std::move(acc);
  }
  return out;
}

ColorDpResult solve_color_dp(const ConvexInstance& inst, StepVariant variant,
                             TraceSink* sink) {
  const BlockStructure blocks = compute_blocks(inst);
  SegmentTable t;
  for (int j = 1; j <= blocks.stage_count(); ++j) {
    const Stage& st = blocks.stages[j - 1];
    t = step1_extend(t, blocks, j);
    if (sink) sink->on_step(j, "1", t);
    for (int yi : st.new_ys) step2a_filter(t, blocks, j, yi);
    if (sink) sink->on_step(j, "2a", t);
    for (int yi : st.new_ys) step2b_propagate(t, blocks, j, yi, variant);
    if (sink) sink->on_step(j, "2b", t);
    t = step3_compact(t, blocks, j);
    if (sink) sink->on_step(j, "3", t);
  }
  ColorDpResult res;
  res.variant = variant;
  const Row& last = t.cells.back();
  res.yes = std::any_of(last.begin(), last.end(),
                        [](std::uint8_t v) { return v != 0; });
  res.final_table = std::move(t);
  return res;
}

UsedSetResult solve_hcol_usedset(const ConvexInstance& inst, const TargetGraph& h,
                                 StepVariant variant) {
  if (h.order != inst.k)
    throw std::invalid_argument("target order must equal instance color count");
  const BlockStructure blocks = compute_blocks(inst);
  const int order = h.order;
  const std::size_t ncols = std::size_t{1} << order;

  auto usable_ok = [&inst](int from, int to_excl, ColorMask u) {
    for (int i = from; i < to_excl; ++i)
      if ((inst.x_lists[i - 1] & u) == 0) return false;
    return true;
  };

  UsedSetTable t;
  t.order = order;
  for (int j = 1; j <= blocks.stage_count(); ++j) {
    const Stage& st = blocks.stages[j - 1];

    UsedSetTable next;
    next.order = order;
    next.starts = st.expanded_breakpoints;
    next.end = st.b + 1;
    next.cells.assign(next.starts.size(), Row(ncols, 0));
    const int carried = static_cast<int>(t.starts.size());
    for (int r = 0; r < carried; ++r) next.cells[r] = t.cells[r];
    if (carried > 0) {
      const int ext_from = t.end;
      const int ext_to = carried < next.row_count() ? next.starts[carried] : next.end;
      for (ColorMask u = 0; u < ncols; ++u)
        if (next.cells[carried - 1][u] && !usable_ok(ext_from, ext_to, u))
          next.cells[carried - 1][u] = 0;
    }
    for (int r = carried; r < next.row_count(); ++r) {
      const int from = next.starts[r];
      const int to = r + 1 < next.row_count() ? next.starts[r + 1] : next.end;
      for (ColorMask u = 0; u < ncols; ++u)
        next.cells[r][u] = usable_ok(from, to, u) ? 1 : 0;
    }
    t = std::move(next);

    // Filter: some color in L(y) must be compatible with every used color.
    for (int yi : st.new_ys) {
      const YVertex& y = inst.ys[yi];
      Row allowed(ncols, 0);
      for (int c : colors_of(y.list))
        for (ColorMask u = 0; u < ncols; ++u)
          if ((u & ~h.adj[c - 1]) == 0) allowed[u] = 1;
      for (int r = 0; r < t.row_count(); ++r) {
        if (t.starts[r] < y.a || t.starts[r] > y.b) continue;
        for (ColorMask u = 0; u < ncols; ++u) t.cells[r][u] &= allowed[u];
      }
    }
    for (int yi : st.new_ys) {
      if (variant == StepVariant::off) break;
      const YVertex& y = inst.ys[yi];
      for (int r = 1; r < t.row_count(); ++r) {
        if (t.starts[r] <= y.a || t.starts[r] > y.b) continue;
        if (variant == StepVariant::pseudocode_and) {
          for (ColorMask u = 0; u < ncols; ++u) t.cells[r][u] &= t.cells[r - 1][u];
        } else {
          Row dn = t.cells[r - 1];
          close_downward(dn, order);
          for (ColorMask u = 0; u < ncols; ++u) t.cells[r][u] &= dn[u];
        }
      }
    }

    // Compact: the used set of a fused segment is the union of its parts.
    UsedSetTable out;
    out.order = order;
    out.starts = st.breakpoints;
    out.end = st.b + 1;
    out.cells.assign(out.starts.size(), Row(ncols, 0));
    for (int i = 0; i < out.row_count(); ++i) {
      const int f_i = find_breakpoint(t.starts, out.starts[i]);
      const int f_next = i + 1 < out.row_count()
                             ? find_breakpoint(t.starts, out.starts[i + 1])
                             : t.row_count();
      Row acc = t.cells[f_i];
      bool closed = false;
      auto fold_in = [&](const Row& other) {
        if (!closed) {
          close_downward(acc, order);
          closed = true;
        }
        Row dn = other;
        close_downward(dn, order);
        for (std::size_t u = 0; u < ncols; ++u) acc[u] &= dn[u];
      };
      for (int q = f_i + 1; q < f_next; ++q) fold_in(t.cells[q]);
      if (i == 0)
        for (int q = 0; q < f_i; ++q) fold_in(t.cells[q]);
      out.cells[i] = std::move(acc);
    }
    t = std::move(out);
  }

  UsedSetResult res;
  res.variant = variant;
  const Row& last = t.cells.back();
  res.yes = std::any_of(last.begin(), last.end(),
                        [](std::uint8_t v) { return v != 0; });
  res.final_table = std::move(t);
  return res;
}

namespace {

struct CapturingSink : TraceSink {
  int want_j;
  std::string want_step;
  std::optional<TraceSnapshot> snap;

  CapturingSink(int j, std::string step) : want_j(j), want_step(std::move(step)) {}

  void on_step(int j, const std::string& step, const SegmentTable& t) override {
    if (j == want_j && step == want_step) snap = TraceSnapshot{j, step, t};
  }
};

}  // namespace

TraceSnapshot trace_tables(const ConvexInstance& inst, int j,
                           const std::string& step, StepVariant variant) {
  if (step != "1" && step != "2a" && step != "2b" && step != "3")
    throw std::invalid_argument("unknown step: " + step);
  const BlockStructure blocks = compute_blocks(inst);
  int real_stages = 0;
  for (const auto& st : blocks.stages)
    if (!st.sentinel) ++real_stages;
  if (real_stages == 0) {
    if (j != 1) throw std::out_of_range("stage index out of range");
    TraceSnapshot snap;
    snap.j = j;
    snap.step = step;
    snap.table.k = inst.k;
    return snap;
  }
  if (j < 1 || j > real_stages)
    throw std::out_of_range("stage index out of range");
  CapturingSink sink(j, step);
  solve_color_dp(inst, variant, &sink);
  assert(sink.snap.has_value());
  return *sink.snap;
}

std::vector<ColorMask> trace_columns(int k) {
  std::vector<ColorMask> cols;
  const ColorMask full = full_mask(k);
  for (ColorMask m = 1; m < full; ++m) cols.push_back(m);
  std::sort(cols.begin(), cols.end(), [](ColorMask a, ColorMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return colors_of(a) < colors_of(b);
  });
  cols.push_back(0);
  return cols;
}

std::string trace_snapshot_json(const TraceSnapshot& snap) {
  nlohmann::ordered_json doc;
  doc["j"] = snap.j;
  doc["step"] = snap.step;
  auto segments = nlohmann::ordered_json::array();
  for (int r = 0; r < snap.table.row_count(); ++r) {
    nlohmann::ordered_json seg;
    seg["from"] = snap.table.starts[r];
    seg["to"] = snap.table.segment_end(r) - 1;
    segments.push_back(std::move(seg));
  }
  doc["segments"] = std::move(segments);
  const auto cols = trace_columns(snap.table.k);
  auto columns = nlohmann::ordered_json::array();
  for (ColorMask m : cols) columns.push_back(nlohmann::ordered_json(colors_of(m)));
  doc["columns"] = std::move(columns);
  auto cells = nlohmann::ordered_json::array();
  for (int r = 0; r < snap.table.row_count(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (ColorMask m : cols) row.push_back(snap.table.cell(r, m));
    cells.push_back(std::move(row));
  }
  doc["cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

std::string trace_snapshot_text(const TraceSnapshot& snap) {
  const auto cols = trace_columns(snap.table.k);
  auto set_label = [](ColorMask m) {
    std::string s = "{";
    bool first = true;
    for (int c : colors_of(m)) {
      if (!first) s += ",";
      s += std::to_string(c);
      first = false;
    }
    return s + "}";
  };
  std::vector<std::string> row_labels;
  std::size_t label_width = 0;
  for (int r = 0; r < snap.table.row_count(); ++r) {
    const int from = snap.table.starts[r];
    const int to = snap.table.segment_end(r) - 1;
    std::string label = from == to ? "{x" + std::to_string(from) + "}"
                                   : "{x" + std::to_string(from) + "..x" +
                                         std::to_string(to) + "}";
    label_width = std::max(label_width, label.size());
    row_labels.push_back(std::move(label));
  }
  std::ostringstream os;
  os << "stage " << snap.j << " after step " << snap.step << "\n";
  os << std::string(label_width, ' ');
  for (ColorMask m : cols) os << "  " << set_label(m);
  os << "\n";
  for (int r = 0; r < snap.table.row_count(); ++r) {
    os << row_labels[r] << std::string(label_width - row_labels[r].size(), ' ');
    for (ColorMask m : cols) {
      const auto pad = set_label(m).size() + 1;
      os << " " << std::string(pad / 2, ' ') << (snap.table.cell(r, m) ? 'T' : 'F')
         << std::string(pad - pad / 2 - 1, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace licol
