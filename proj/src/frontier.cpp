#include "licol/frontier.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace licol {

namespace {

// One position's surviving states, flattened; `parent` and `choices` are
// only populated when a certificate was requested.
struct Frame {
  std::vector<std::uint32_t> states;   // count * order entries
  std::vector<std::uint32_t> parent;   // index into the previous frame
  std::vector<std::uint8_t> choices;   // count * (#Y starting here) colors
};

struct SweepOutcome {
  bool yes = false;
  std::vector<Frame> frames;  // kept only when tracking
  std::vector<std::uint64_t> census;
};

SweepOutcome sweep(const ConvexInstance& inst, const TargetGraph& h, bool track) {
  if (h.order != inst.k)
    throw std::invalid_argument("target order must equal instance color count");
  if (auto rep = validate_instance(inst); !rep.ok())
    throw std::invalid_argument("invalid instance: " + rep.to_string());

  const int n = inst.n();
  const int order = h.order;

  std::vector<std::vector<int>> starting(n + 1);
  for (int yi = 0; yi < inst.y_count(); ++yi)
    starting[inst.ys[yi].a].push_back(yi);

  SweepOutcome out;
  out.census.assign(n, 0);
  if (track) {
    Frame initial;
    initial.states.assign(order, 0);
    out.frames.push_back(std::move(initial));
  }

  std::vector<std::uint32_t> cur(order, 0);  // one all-expired state
  std::size_t cur_count = 1;

  std::vector<std::uint32_t> exp, next_exp;
  std::vector<std::uint32_t> exp_parent, next_parent;
  std::vector<std::uint8_t> exp_choices, next_choices;

  for (int pos = 1; pos <= n; ++pos) {
    const auto& ys_here = starting[pos];
    const std::size_t stride = ys_here.size();

    exp = cur;
    exp_parent.resize(cur_count);
    std::iota(exp_parent.begin(), exp_parent.end(), 0);
    exp_choices.clear();
    std::size_t exp_count = cur_count;

    for (std::size_t yslot = 0; yslot < ys_here.size(); ++yslot) {
      const YVertex& y = inst.ys[ys_here[yslot]];
      const auto colors = colors_of(y.list);
      next_exp.clear();
      next_parent.clear();
      next_choices.clear();
      for (std::size_t s = 0; s < exp_count; ++s) {
        const std::uint32_t* state = exp.data() + s * order;
        for (int c : colors) {
          const std::size_t at = next_exp.size();
          next_exp.insert(next_exp.end(), state, state + order);
          next_exp[at + c - 1] =
              std::max<std::uint32_t>(next_exp[at + c - 1], y.b);
          next_parent.push_back(exp_parent[s]);
          next_choices.insert(next_choices.end(),
                              exp_choices.begin() + s * yslot,
                              exp_choices.begin() + s * yslot + yslot);
          next_choices.push_back(static_cast<std::uint8_t>(c));
        }
      }
      exp.swap(next_exp);
      exp_parent.swap(next_parent);
      exp_choices.swap(next_choices);
      exp_count = exp_parent.size();

      // Keep the intermediate set small; many intervals sharing one start
      // position would otherwise multiply before the end-of-position dedupe.
      if (exp_count > 64) {
        const std::size_t stride_now = yslot + 1;
        std::vector<std::uint32_t> idx(exp_count);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::uint32_t a, std::uint32_t b) {
                           return std::lexicographical_compare(
                               exp.begin() + a * order,
                               exp.begin() + (a + 1) * order,
                               exp.begin() + b * order,
                               exp.begin() + (b + 1) * order);
                         });
        next_exp.clear();
        next_parent.clear();
        next_choices.clear();
        for (std::size_t t = 0; t < idx.size(); ++t) {
          const std::uint32_t s = idx[t];
          if (t > 0 && std::equal(exp.begin() + idx[t - 1] * order,
                                  exp.begin() + (idx[t - 1] + 1) * order,
                                  exp.begin() + s * order))
            continue;
          next_exp.insert(next_exp.end(), exp.begin() + s * order,
                          exp.begin() + (s + 1) * order);
          next_parent.push_back(exp_parent[s]);
          next_choices.insert(next_choices.end(),
                              exp_choices.begin() + s * stride_now,
                              exp_choices.begin() + (s + 1) * stride_now);
        }
        exp.swap(next_exp);
        exp_parent.swap(next_parent);
        exp_choices.swap(next_choices);
        exp_count = exp_parent.size();
      }
    }

    // Prune at x_pos, clamp expired entries, then dedupe.
    const ColorMask xlist = inst.x_lists[pos - 1];
    std::size_t kept = 0;
    for (std::size_t s = 0; s < exp_count; ++s) {
      std::uint32_t* state = exp.data() + s * order;
      ColorMask active = 0;
      for (int c = 0; c < order; ++c)
        if (state[c] != 0) active |= ColorMask{1} << c;
      bool ok = false;
      for (ColorMask rest = xlist; rest != 0; rest &= rest - 1) {
        const int cx = std::countr_zero(rest);
        if ((active & ~h.adj[cx]) == 0) {
          ok = true;
          break;
        }
      }
      if (!ok) continue;
      std::uint32_t* dst = exp.data() + kept * order;
      for (int c = 0; c < order; ++c)
        dst[c] = state[c] > static_cast<std::uint32_t>(pos) ? state[c] : 0;
      exp_parent[kept] = exp_parent[s];
      if (stride > 0)
        std::copy(exp_choices.begin() + s * stride,
                  exp_choices.begin() + (s + 1) * stride,
                  exp_choices.begin() + kept * stride);
      ++kept;
    }

    std::vector<std::uint32_t> idx(kept);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&exp, order](std::uint32_t a, std::uint32_t b) {
                       return std::lexicographical_compare(
                           exp.begin() + a * order, exp.begin() + (a + 1) * order,
                           exp.begin() + b * order, exp.begin() + (b + 1) * order);
                     });
    auto same = [&exp, order](std::uint32_t a, std::uint32_t b) {
      return std::equal(exp.begin() + a * order, exp.begin() + (a + 1) * order,
                        exp.begin() + b * order);
    };

    Frame frame;
    std::vector<std::uint32_t>& out_states = track ? frame.states : cur;
    out_states.clear();
    frame.parent.clear();
    frame.choices.clear();
    std::size_t out_count = 0;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (t > 0 && same(idx[t - 1], idx[t])) continue;
      const std::uint32_t s = idx[t];
      out_states.insert(out_states.end(), exp.begin() + s * order,
                        exp.begin() + (s + 1) * order);
      if (track) {
        frame.parent.push_back(exp_parent[s]);
        frame.choices.insert(frame.choices.end(),
                             exp_choices.begin() + s * stride,
                             exp_choices.begin() + (s + 1) * stride);
      }
      ++out_count;
    }
    if (track) {
      cur = frame.states;
      out.frames.push_back(std::move(frame));
    }
    cur_count = out_count;
    out.census[pos - 1] = out_count;
    if (cur_count == 0) break;  // dead state sets never revive
  }

  out.yes = cur_count > 0;
  return out;
}

Coloring reconstruct(const ConvexInstance& inst, const TargetGraph& h,
                     const SweepOutcome& out) {
  const int n = inst.n();
  const int order = h.order;
  std::vector<std::vector<int>> starting(n + 1);
  for (int yi = 0; yi < inst.y_count(); ++yi)
    starting[inst.ys[yi].a].push_back(yi);

  Coloring col;
  col.y.assign(inst.y_count(), 0);
  std::uint32_t at = 0;
  for (int pos = n; pos >= 1; --pos) {
    const Frame& frame = out.frames[pos];
    const auto& ys_here = starting[pos];
    for (std::size_t yslot = 0; yslot < ys_here.size(); ++yslot)
      col.y[ys_here[yslot]] = frame.choices[at * ys_here.size() + yslot];
    at = frame.parent[at];
  }

  std::vector<ColorMask> active(n + 1, 0);
  for (int yi = 0; yi < inst.y_count(); ++yi) {
    const YVertex& y = inst.ys[yi];
    for (int i = y.a; i <= y.b; ++i) active[i] |= color_bit(col.y[yi]);
  }
  col.x.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int c : colors_of(inst.x_lists[i - 1])) {
      if ((active[i] & ~h.adj[c - 1]) == 0) {
        col.x[i - 1] = c;
        break;
      }
    }
    assert(col.x[i - 1] != 0);
  }
  return col;
}

}  // namespace

FrontierResult solve_frontier(const ConvexInstance& inst, const TargetGraph& h,
                              bool want_certificate) {
  SweepOutcome out = sweep(inst, h, want_certificate);
  FrontierResult res;
  res.yes = out.yes;
  if (res.yes && want_certificate) res.certificate = reconstruct(inst, h, out);
  return res;
}

std::vector<std::uint64_t> state_census(const ConvexInstance& inst,
                                        const TargetGraph& h) {
  return sweep(inst, h, false).census;
}

}  // namespace licol
