#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "licol/bench.hpp"
#include "licol/color_dp.hpp"
#include "licol/difftest.hpp"
#include "licol/frontier.hpp"
#include "licol/gen.hpp"
#include "licol/json_io.hpp"
#include "licol/oracle.hpp"
#include "licol/orderings.hpp"

namespace {

using namespace licol;
using nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDiverged = 3;

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ConvexInstance load_instance(const std::string& path) {
  ConvexInstance inst = parse_instance(read_file(path));
  if (auto rep = validate_instance(inst); !rep.ok())
    throw ParseError("invalid instance: " + rep.to_string());
  return inst;
}

ordered_json coloring_json(const Coloring& col) {
  ordered_json doc;
  doc["x"] = col.x;
  doc["y"] = col.y;
  return doc;
}

struct SolveOptions {
  std::string input;
  std::string target;  // hcol only
  std::string algo = "frontier";
  std::string variant;
  bool certificate = false;
  bool pretty = false;
};

int run_solve(const SolveOptions& opt, bool hcol) {
  const ConvexInstance inst = load_instance(opt.input);
  const TargetGraph h = hcol ? parse_target(read_file(opt.target))
                             : TargetGraph::complete(inst.k);
  if (h.order != inst.k)
    throw ParseError("target order does not match instance color count");

  ordered_json doc;
  doc["command"] = hcol ? "hcol" : "solve";
  doc["algo"] = opt.algo;

  bool yes = false;
  std::optional<Coloring> certificate;
  if (opt.algo == "frontier") {
    FrontierResult res = solve_frontier(inst, h, opt.certificate);
    yes = res.yes;
    certificate = std::move(res.certificate);
  } else if (opt.algo == "brute") {
    OracleResult res = brute_force_solve(inst, h);
    yes = res.yes;
    if (opt.certificate) certificate = std::move(res.certificate);
  } else if (!hcol && opt.algo == "color-dp") {
    const StepVariant variant = opt.variant.empty()
                                    ? StepVariant::pseudocode_and
                                    : parse_variant(opt.variant);
    yes = solve_color_dp(inst, variant).yes;
    doc["variant"] = variant_name(variant);
  } else if (hcol && opt.algo == "usedset") {
    const StepVariant variant = opt.variant.empty()
                                    ? StepVariant::pseudocode_and
                                    : parse_variant(opt.variant);
    yes = solve_hcol_usedset(inst, h, variant).yes;
    doc["variant"] = variant_name(variant);
  } else {
    throw ParseError("unknown algorithm: " + opt.algo);
  }

  doc["decision"] = yes ? "YES" : "NO";
  if (opt.certificate) {
    if (certificate) {
      if (!verify_coloring(inst, h, *certificate))
        throw std::logic_error("certificate failed verification");
      doc["certificate"] = coloring_json(*certificate);
    } else {
      doc["certificate"] = nullptr;
    }
  }
  emit(doc);
  if (opt.pretty)
    std::cerr << (yes ? "YES" : "NO") << " (" << opt.algo << ")\n";
  return yes ? kExitYes : kExitNo;
}

struct TraceOptions {
  std::string input;
  int j = 1;
  std::string step = "1";
  std::string variant = "off";
  bool pretty = false;
};

int run_trace(const TraceOptions& opt) {
  const ConvexInstance inst = load_instance(opt.input);
  const TraceSnapshot snap =
      trace_tables(inst, opt.j, opt.step, parse_variant(opt.variant));
  std::cout << trace_snapshot_json(snap);
  if (opt.pretty) std::cerr << trace_snapshot_text(snap);
  return kExitYes;
}

struct CheckOptions {
  std::string mode;
  std::string input;
  std::string x_order;
  std::string y_order;
  std::string order;
  std::string start;
  int cap = 60;
  bool find = false;
  bool pretty = false;
};

int run_check(const CheckOptions& opt) {
  const BipartiteGraph g = parse_graph(read_file(opt.input));
  ordered_json doc;
  doc["command"] = "check";
  doc["mode"] = opt.mode;
  bool ok = false;

  auto labels = [&g](const auto& ids) {
    std::vector<std::string> out;
    for (int v : ids) out.push_back(vertex_label(g, v));
    return out;
  };
  auto identity = [](int count) {
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 1);
    return order;
  };

  if (opt.mode == "convex") {
    if (opt.find) {
      auto found = find_convex_ordering_bruteforce(g);
      ok = found.has_value();
      doc["found_order"] = found ? ordered_json(*found) : ordered_json(nullptr);
    } else {
      const auto x_order =
          opt.x_order.empty() ? identity(g.x_count) : parse_int_list(opt.x_order);
      if (static_cast<int>(x_order.size()) != g.x_count)
        throw std::invalid_argument("x_order: wrong length");
      std::vector<int> pos(g.x_count + 1, -1);
      for (int t = 0; t < g.x_count; ++t) {
        const int xi = x_order[t];
        if (xi < 1 || xi > g.x_count || pos[xi] != -1)
          throw std::invalid_argument("x_order: not a permutation");
        pos[xi] = t;
      }
      ok = true;
      for (const auto& nbrs : g.y_adj) {
        if (nbrs.empty()) continue;
        int lo = g.x_count, hi = -1;
        for (int xi : nbrs) {
          lo = std::min(lo, pos[xi]);
          hi = std::max(hi, pos[xi]);
        }
        if (hi - lo + 1 != static_cast<int>(nbrs.size())) ok = false;
      }
      doc["x_order"] = x_order;
    }
  } else if (opt.mode == "biconvex") {
    const auto x_order =
        opt.x_order.empty() ? identity(g.x_count) : parse_int_list(opt.x_order);
    const auto y_order =
        opt.y_order.empty() ? identity(g.y_count()) : parse_int_list(opt.y_order);
    ok = verify_biconvex(g, x_order, y_order);
    doc["x_order"] = x_order;
    doc["y_order"] = y_order;
  } else if (opt.mode == "straight") {
    if (opt.order.empty()) throw ParseError("straight check needs --order");
    std::vector<int> ids;
    for (const auto& label : split_labels(opt.order))
      ids.push_back(parse_vertex(g, label));
    const StraightCheck check = verify_straight(g, ids);
    ok = check.ok;
    if (!check.ok) doc["crossing"] = labels(check.crossing);
  } else if (opt.mode == "multichain") {
    if (!opt.start.empty()) {
      const LayeredOrdering layered = bfs_layers(g, parse_vertex(g, opt.start));
      ordered_json layer_doc = ordered_json::array();
      for (const auto& layer : layered.layers) layer_doc.push_back(labels(layer));
      doc["start"] = opt.start;
      doc["layers"] = std::move(layer_doc);
      doc["unreached"] = labels(layered.unreached);
      const MultichainCheck check = verify_multichain(g, layered);
      ok = check.ok;
      if (!check.ok) {
        doc["failing_layer"] = check.failing_layer;
        doc["witness"] = labels(std::vector<int>{
            check.witness->a1, check.witness->b1, check.witness->a2,
            check.witness->b2});
      }
    } else {
      // no start given: search for one whose layers form chains
      doc["start"] = nullptr;
      for (int v = 0; v < g.x_count + g.y_count(); ++v) {
        const LayeredOrdering layered = bfs_layers(g, v);
        if (verify_multichain(g, layered).ok) {
          ok = true;
          doc["start"] = vertex_label(g, v);
          ordered_json layer_doc = ordered_json::array();
          for (const auto& layer : layered.layers)
            layer_doc.push_back(labels(layer));
          doc["layers"] = std::move(layer_doc);
          doc["unreached"] = labels(layered.unreached);
          break;
        }
      }
    }
  } else if (opt.mode == "subd13") {
    auto witness = find_subdivided_k13(g, opt.cap);
    ok = witness.has_value();
    doc["found"] = ok;
    if (witness) {
      ordered_json w;
      w["center"] = vertex_label(g, witness->center);
      w["mids"] = labels(witness->mids);
      w["tips"] = labels(witness->tips);
      doc["witness"] = std::move(w);
    }
  } else {
    throw ParseError("unknown check mode: " + opt.mode);
  }

  if (opt.mode != "subd13") doc["ok"] = ok;
  emit(doc);
  if (opt.pretty)
    std::cerr << opt.mode << ": " << (ok ? "yes" : "no") << "\n";
  return ok ? kExitYes : kExitNo;
}

struct GenOptions {
  std::string mode;
  std::uint64_t seed = 1;
  int n = 8;
  int y = 4;
  int k = 3;
  double density = 0.6;
  int order = 3;
  double edge_density = 0.5;
  double loop_density = 0.0;
  std::string out;
  bool pretty = false;
};

int run_gen(const GenOptions& opt) {
  std::string doc;
  if (opt.mode == "convex") {
    doc = serialize_instance(
        gen_convex_instance(opt.seed, opt.n, opt.y, opt.k, opt.density));
  } else if (opt.mode == "biconvex") {
    const BiconvexInstance result =
        gen_biconvex_instance(opt.seed, opt.n, opt.y, opt.k, opt.density);
    doc = serialize_instance(result.inst);
    if (opt.pretty)
      std::cerr << "biconvex certificate: Y already in certified order\n";
  } else if (opt.mode == "target") {
    doc = serialize_target(
        gen_target(opt.seed, opt.order, opt.edge_density, opt.loop_density));
  } else {
    throw ParseError("unknown gen mode: " + opt.mode);
  }
  std::cout << doc;
  if (!opt.out.empty()) write_file(opt.out, doc);
  return kExitYes;
}

struct DifftestOptions {
  int count = 100;
  std::uint64_t seed = 7;
  int max_n = 7;
  int max_y = 4;
  int k = 3;
  std::string target = "complete";
  int order = 3;
  double edge_density = 0.5;
  double loop_density = 0.25;
  std::string out_dir = "difftest-counterexamples";
  bool pretty = false;
};

int run_difftest_cmd(const DifftestOptions& opt) {
  DifftestParams params;
  params.count = opt.count;
  params.seed = opt.seed;
  params.max_n = opt.max_n;
  params.max_y = opt.max_y;
  params.k = opt.k;
  params.out_dir = opt.out_dir;
  if (opt.target == "complete") {
    params.h.kind = HSpec::Kind::complete;
    params.h.order = opt.k;
  } else if (opt.target == "random") {
    params.h.kind = HSpec::Kind::random;
    params.h.order = opt.order;
    params.h.edge_density = opt.edge_density;
    params.h.loop_density = opt.loop_density;
  } else {
    throw ParseError("unknown target kind: " + opt.target);
  }
  const DifftestReport report = run_difftest(params);
  std::cout << difftest_report_json(report);
  if (opt.pretty) std::cerr << difftest_report_text(report);
  return report.ok() ? kExitYes : kExitDiverged;
}

struct BenchOptions {
  std::string sizes = "100,1000";
  int k = 3;
  std::string algo = "frontier";
  std::string variant = "pseudocode-and";
  std::uint64_t seed = 1;
  std::string csv;
  bool pretty = false;
};

int run_bench_cmd(const BenchOptions& opt) {
  const BenchAlgo algo = parse_bench_algo(opt.algo);
  const auto rows = run_bench(parse_int_list(opt.sizes), opt.k, algo,
                              parse_variant(opt.variant), opt.seed);
  std::cout << bench_json(rows, opt.k, algo, opt.seed);
  if (!opt.csv.empty()) write_file(opt.csv, bench_csv(rows));
  if (opt.pretty) std::cerr << bench_text(rows);
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"list coloring toolkit for convex bipartite graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false;
  app.add_flag("--pretty", pretty,
               "render a human-readable report to standard error");

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "decide list k-coloring");
  solve->add_option("--input", solve_opt.input, "instance file")->required();
  solve->add_option("--algo", solve_opt.algo, "frontier|color-dp|brute");
  solve->add_option("--variant", solve_opt.variant,
                    "off|pseudocode-and|prose-superset (color-dp)");
  solve->add_flag("--certificate", solve_opt.certificate,
                  "emit a verified coloring on YES");

  SolveOptions hcol_opt;
  auto* hcol = app.add_subcommand("hcol", "decide list H-coloring");
  hcol->add_option("--input", hcol_opt.input, "instance file")->required();
  hcol->add_option("--target", hcol_opt.target, "target graph file")->required();
  hcol->add_option("--algo", hcol_opt.algo, "frontier|usedset|brute");
  hcol->add_option("--variant", hcol_opt.variant,
                   "off|pseudocode-and|prose-superset (usedset)");
  hcol->add_flag("--certificate", hcol_opt.certificate,
                 "emit a verified coloring on YES");

  TraceOptions trace_opt;
  auto* trace = app.add_subcommand("trace", "dump one sweep table snapshot");
  trace->add_option("--input", trace_opt.input, "instance file")->required();
  trace->add_option("--j", trace_opt.j, "stage index (1-based)")->required();
  trace->add_option("--step", trace_opt.step, "1|2a|2b|3")->required();
  trace->add_option("--variant", trace_opt.variant,
                    "off|pseudocode-and|prose-superset");

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "verify a structural property");
  check->add_option("mode", check_opt.mode,
                    "convex|biconvex|straight|multichain|subd13")
      ->required();
  check->add_option("--input", check_opt.input, "graph file")->required();
  check->add_option("--x-order", check_opt.x_order, "1-based X indices, csv");
  check->add_option("--y-order", check_opt.y_order, "1-based Y indices, csv");
  check->add_option("--order", check_opt.order, "vertex labels, csv");
  check->add_option("--start", check_opt.start,
                    "BFS start vertex label (multichain searches all starts "
                    "when omitted)");
  check->add_option("--cap", check_opt.cap, "search size cap");
  check->add_flag("--find", check_opt.find, "search for a convex ordering");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a seeded instance or target");
  gen->add_option("mode", gen_opt.mode, "convex|biconvex|target")->required();
  gen->add_option("--seed", gen_opt.seed, "generator seed");
  gen->add_option("--n", gen_opt.n, "X-vertex count");
  gen->add_option("--y", gen_opt.y, "Y-vertex count");
  gen->add_option("--k", gen_opt.k, "color count");
  gen->add_option("--density", gen_opt.density, "list density in (0,1]");
  gen->add_option("--order", gen_opt.order, "target order");
  gen->add_option("--edge-density", gen_opt.edge_density, "target edge density");
  gen->add_option("--loop-density", gen_opt.loop_density, "target loop density");
  gen->add_option("--out", gen_opt.out, "also write the document here");

  DifftestOptions diff_opt;
  auto* difft = app.add_subcommand("difftest", "cross-check all solvers");
  difft->add_option("--count", diff_opt.count, "number of random instances");
  difft->add_option("--seed", diff_opt.seed, "master seed");
  difft->add_option("--max-n", diff_opt.max_n, "maximal X count");
  difft->add_option("--max-y", diff_opt.max_y, "maximal Y count");
  difft->add_option("--k", diff_opt.k, "color count (complete target)");
  difft->add_option("--target", diff_opt.target, "complete|random");
  difft->add_option("--order", diff_opt.order, "maximal random target order");
  difft->add_option("--edge-density", diff_opt.edge_density,
                    "random target edge density");
  difft->add_option("--loop-density", diff_opt.loop_density,
                    "random target loop density");
  difft->add_option("--out-dir", diff_opt.out_dir,
                    "directory for counterexample fixtures");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "measure solver scaling");
  bench->add_option("--sizes", bench_opt.sizes, "instance sizes, csv");
  bench->add_option("--k", bench_opt.k, "color count");
  bench->add_option("--algo", bench_opt.algo, "frontier|color-dp|brute");
  bench->add_option("--variant", bench_opt.variant, "color-dp variant");
  bench->add_option("--seed", bench_opt.seed, "generator seed");
  bench->add_option("--csv", bench_opt.csv, "write size,states,millis here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      solve_opt.pretty = pretty;
      return run_solve(solve_opt, false);
    }
    if (hcol->parsed()) {
      hcol_opt.pretty = pretty;
      if (hcol_opt.algo == "frontier" || hcol_opt.algo == "brute" ||
          hcol_opt.algo == "usedset")
        return run_solve(hcol_opt, true);
      throw ParseError("unknown algorithm: " + hcol_opt.algo);
    }
    if (trace->parsed()) {
      trace_opt.pretty = pretty;
      return run_trace(trace_opt);
    }
    if (check->parsed()) {
      check_opt.pretty = pretty;
      return run_check(check_opt);
    }
    if (gen->parsed()) {
      gen_opt.pretty = pretty;
      return run_gen(gen_opt);
    }
    if (difft->parsed()) {
      diff_opt.pretty = pretty;
      return run_difftest_cmd(diff_opt);
    }
    if (bench->parsed()) {
      bench_opt.pretty = pretty;
      return run_bench_cmd(bench_opt);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const GenError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
