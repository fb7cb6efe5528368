#include "licol/difftest.hpp"

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "licol/frontier.hpp"
#include "licol/gen.hpp"
#include "licol/json_io.hpp"
#include "licol/oracle.hpp"

namespace licol {

namespace {

std::string decision_str(bool yes) { return yes ? "YES" : "NO"; }

void bump(DifftestReport& report, const std::string& solver, bool agrees) {
  auto& [agree, total] = report.agreement[solver];
  ++total;
  if (agrees) ++agree;
}

}  // namespace

DifftestReport run_difftest(const DifftestParams& params) {
  DifftestReport report;
  report.params = params;
  SplitMix64 master(params.seed);

  for (int index = 0; index < params.count; ++index) {
    TargetGraph h;
    int k = params.k;
    if (params.h.kind == HSpec::Kind::complete) {
      h = TargetGraph::complete(params.h.order);
      k = params.h.order;
    } else {
      const int order = 1 + static_cast<int>(master.below(params.h.order));
      h = gen_target(master.next(), order, params.h.edge_density,
                     params.h.loop_density);
      k = order;
    }
    const int n = 1 + static_cast<int>(master.below(params.max_n));
    const int y_count = static_cast<int>(master.below(params.max_y + 1));
    const double density = 0.3 + 0.2 * static_cast<double>(master.below(4));
    const ConvexInstance inst =
        gen_convex_instance(master.next(), n, y_count, k, density);

    const OracleResult brute = brute_force_solve(inst, h);
    if (brute.yes && !verify_coloring(inst, h, *brute.certificate))
      report.certificates_ok = false;

    const FrontierResult frontier = solve_frontier(inst, h, true);
    if (frontier.yes && !verify_coloring(inst, h, *frontier.certificate))
      report.certificates_ok = false;

    std::map<std::string, std::string> decisions;
    decisions["brute"] = decision_str(brute.yes);
    decisions["frontier"] = decision_str(frontier.yes);
    bump(report, "frontier", frontier.yes == brute.yes);
    if (frontier.yes != brute.yes) report.frontier_brute_ok = false;

    for (StepVariant variant : {StepVariant::off, StepVariant::pseudocode_and,
                                StepVariant::prose_superset}) {
      if (params.h.kind == HSpec::Kind::complete) {
        const ColorDpResult dp = solve_color_dp(inst, variant);
        const std::string name = "color-dp-" + variant_name(variant);
        decisions[name] = decision_str(dp.yes);
        bump(report, name, dp.yes == brute.yes);
      }
      const UsedSetResult us = solve_hcol_usedset(inst, h, variant);
      const std::string name = "usedset-" + variant_name(variant);
      decisions[name] = decision_str(us.yes);
      bump(report, name, us.yes == brute.yes);
    }

    bool disagrees = false;
    for (const auto& [solver, decision] : decisions)
      if (decision != decisions["brute"]) disagrees = true;
    if (disagrees) {
      Disagreement d;
      d.index = index;
      d.inst = inst;
      d.target = h;
      d.decisions = decisions;
      if (!params.out_dir.empty()) {
        std::filesystem::create_directories(params.out_dir);
        char tag[32];
        std::snprintf(tag, sizeof tag, "%04d", index);
        const std::string inst_path =
            params.out_dir + "/instance_" + tag + ".json";
        const std::string target_path =
            params.out_dir + "/target_" + tag + ".json";
        write_file(inst_path, serialize_instance(inst));
        write_file(target_path, serialize_target(h));
        d.files = {inst_path, target_path};
      }
      report.disagreements.push_back(std::move(d));
    }
    ++report.cases;
  }
  return report;
}

std::string difftest_report_json(const DifftestReport& report) {
  nlohmann::ordered_json doc;
  doc["count"] = report.cases;
  doc["seed"] = report.params.seed;
  doc["max_n"] = report.params.max_n;
  doc["max_y"] = report.params.max_y;
  if (report.params.h.kind == HSpec::Kind::complete) {
    doc["target"] = {{"kind", "complete"}, {"order", report.params.h.order}};
  } else {
    doc["target"] = {{"kind", "random"}, {"max_order", report.params.h.order}};
  }
  auto agreement = nlohmann::ordered_json::object();
  for (const auto& [solver, counts] : report.agreement) {
    agreement[solver] = {{"agree", counts.first}, {"total", counts.second}};
  }
  doc["agreement"] = std::move(agreement);
  auto disagreements = nlohmann::ordered_json::array();
  for (const auto& d : report.disagreements) {
    nlohmann::ordered_json entry;
    entry["index"] = d.index;
    entry["decisions"] = d.decisions;
    entry["files"] = d.files;
    disagreements.push_back(std::move(entry));
  }
  doc["disagreements"] = std::move(disagreements);
  doc["certificates_ok"] = report.certificates_ok;
  doc["frontier_vs_brute_ok"] = report.frontier_brute_ok;
  doc["ok"] = report.ok();
  return doc.dump(2) + "\n";
}

std::string difftest_report_text(const DifftestReport& report) {
  std::ostringstream os;
  os << "difftest: " << report.cases << " cases\n";
  for (const auto& [solver, counts] : report.agreement)
    os << "  " << solver << " vs brute: " << counts.first << "/" << counts.second
       << "\n";
  os << "  disagreements recorded: " << report.disagreements.size() << "\n";
  os << "  verdict: " << (report.ok() ? "OK" : "DIVERGED") << "\n";
  return os.str();
}

SweepReport exhaustive_sweep(int max_n, int max_y, int k, bool with_color_dp) {
  SweepReport report;
  const TargetGraph h = TargetGraph::complete(k);
  const ColorMask lists = full_mask(k) + 1;  // list choices per vertex

  for (int n = 1; n <= max_n; ++n) {
    const int intervals = n * (n + 1) / 2;
    std::vector<YVertex> interval_table;
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) interval_table.push_back({a, b, 0});

    for (int y_count = 0; y_count <= max_y; ++y_count) {
      ConvexInstance inst;
      inst.k = k;
      inst.x_lists.assign(n, 0);
      inst.ys.assign(y_count, {1, 1, 0});

      // Odometer over every x-list, y-interval and y-list combination.
      const int digits = n + 2 * y_count;
      std::vector<std::uint64_t> counter(digits, 0);
      auto radix = [&](int d) -> std::uint64_t {
        if (d < n) return lists;
        return (d - n) % 2 == 0 ? intervals : lists;
      };
      bool done = false;
      while (!done) {
        for (int i = 0; i < n; ++i) inst.x_lists[i] = counter[i];
        for (int j = 0; j < y_count; ++j) {
          const auto& iv = interval_table[counter[n + 2 * j]];
          inst.ys[j].a = iv.a;
          inst.ys[j].b = iv.b;
          inst.ys[j].list = counter[n + 2 * j + 1];
        }

        const bool brute = brute_force_solve(inst, h).yes;
        const bool frontier = solve_frontier(inst, h).yes;
        ++report.cases;
        if (frontier == brute) ++report.frontier_brute_agree;
        if (with_color_dp) {
          for (StepVariant variant :
               {StepVariant::off, StepVariant::pseudocode_and,
                StepVariant::prose_superset}) {
            if (solve_color_dp(inst, variant).yes != brute)
              ++report.color_dp_disagreements["color-dp-" +
                                              variant_name(variant)];
          }
        }

        done = true;
        for (int d = 0; d < digits; ++d) {
          if (++counter[d] < radix(d)) {
            done = false;
            break;
          }
          counter[d] = 0;
        }
      }
    }
  }
  return report;
}

}  // namespace licol
