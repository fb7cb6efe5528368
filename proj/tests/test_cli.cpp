#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "json.hpp"

#include "cli_helpers.hpp"
#include "fixtures.hpp"
#include "licol/json_io.hpp"

using namespace licol;
using namespace licol::tests;
using nlohmann::json;

namespace {

std::string data(const std::string& name) {
  return test_data_path(name);
}

}  // namespace

TEST_CASE("solve decides the reference instance") {
  const CliResult res =
      run_cli("solve --input " + data("reference_instance.json") + " --certificate");
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.out);
  CHECK(doc["algo"] == "frontier");
  CHECK(doc["decision"] == "YES");
  const Coloring col = parse_coloring(doc["certificate"].dump());
  CHECK(verify_coloring(reference_instance(), TargetGraph::complete(3), col));
}

TEST_CASE("solve records the color-dp variant") {
  const CliResult res = run_cli("solve --input " + data("reference_instance.json") +
                                " --algo color-dp");
  const json doc = json::parse(res.out);
  CHECK(doc["variant"] == "pseudocode-and");

  const CliResult off = run_cli("solve --input " + data("reference_instance.json") +
                                " --algo color-dp --variant off");
  CHECK(json::parse(off.out)["variant"] == "off");
}

TEST_CASE("infeasible instances exit with 1") {
  const CliResult res = run_cli("solve --input " + data("no_instance.json"));
  CHECK(res.exit_code == 1);
  CHECK(json::parse(res.out)["decision"] == "NO");
}

TEST_CASE("bad inputs exit with 2") {
  CHECK(run_cli("solve --input /nonexistent.json").exit_code == 2);
  CHECK(run_cli("solve --input " + data("reference_instance.json") +
                " --algo color-dp --variant bogus")
            .exit_code == 2);
  CHECK(run_cli("trace --input " + data("reference_instance.json") +
                " --j 9 --step 1")
            .exit_code == 2);
  CHECK(run_cli("check convex --input " + data("reference_instance.json"))
            .exit_code == 2);  // an instance is not a graph document
}

TEST_CASE("trace emits the golden snapshot") {
  const CliResult res = run_cli("trace --input " + data("reference_instance.json") +
                                " --j 1 --step 1");
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.out);
  CHECK(doc["j"] == 1);
  CHECK(doc["segments"].size() == 3);
  CHECK(doc["segments"][0] == json({{"from", 1}, {"to", 3}}));
  CHECK(doc["columns"].size() == 7);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c)
      CHECK(doc["cells"][r][c] == kStage1AfterStep1[r][c]);
}

TEST_CASE("hcol against an explicit target") {
  const CliResult res = run_cli("hcol --input " + data("reference_instance.json") +
                                " --target " + data("k3_target.json") +
                                " --algo usedset --variant off");
  REQUIRE(res.exit_code <= 1);
  const json doc = json::parse(res.out);
  CHECK(doc["command"] == "hcol");
  CHECK(doc["variant"] == "off");
}

TEST_CASE("structure checks") {
  const CliResult multichain = run_cli(
      "check multichain --input " + data("corner_graph.json") + " --start x1");
  REQUIRE(multichain.exit_code == 0);
  const json doc = json::parse(multichain.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["layers"].size() == 5);
  CHECK(doc["layers"][1] == json::array({"y1", "y2"}));

  const CliResult searched =
      run_cli("check multichain --input " + data("corner_graph.json"));
  REQUIRE(searched.exit_code == 0);
  CHECK(json::parse(searched.out)["start"] == "x1");

  CHECK(run_cli("check biconvex --input " + data("reference_graph.json"))
            .exit_code == 1);
  CHECK(run_cli("check biconvex --input " + data("corner_graph.json"))
            .exit_code == 0);
  CHECK(run_cli("check subd13 --input " + data("subd_k13_graph.json"))
            .exit_code == 0);
  CHECK(run_cli("check subd13 --input " + data("corner_graph.json"))
            .exit_code == 1);
  CHECK(run_cli("check convex --input " + data("corner_graph.json"))
            .exit_code == 0);
  CHECK(run_cli("check straight --input " + data("corner_graph.json") +
                " --order x1,y1,x2,y2,x3,y3,x4,y4,x5,x6,x7")
            .exit_code == 0);

  const CliResult found =
      run_cli("check convex --input " + data("corner_graph.json") + " --find");
  REQUIRE(found.exit_code == 0);
  CHECK(json::parse(found.out)["found_order"] ==
        json::array({1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("generation through the CLI is reproducible") {
  const std::string args = "gen convex --seed 1 --n 8 --y 4 --k 3 --density 0.6";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == read_file(data("gen_seed1_n8.json")));

  const CliResult target = run_cli("gen target --seed 3 --order 3 "
                                   "--edge-density 1.0 --loop-density 0.0");
  CHECK(parse_target(target.out) == TargetGraph::complete(3));

  const auto out = std::filesystem::temp_directory_path() / "licol_gen.json";
  std::filesystem::remove(out);
  const CliResult written = run_cli(args + " --out " + out.string());
  CHECK(read_file(out.string()) == written.out);
  std::filesystem::remove(out);
}

TEST_CASE("difftest exits clean on healthy batches") {
  const auto dir = std::filesystem::temp_directory_path() / "licol_cli_diff";
  std::filesystem::remove_all(dir);
  const CliResult res = run_cli(
      "difftest --count 25 --seed 3 --max-n 6 --max-y 3 --k 3 --out-dir " +
      dir.string());
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.out);
  CHECK(doc["agreement"]["frontier"]["agree"] == 25);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bench writes the timing table to a file") {
  const auto csv = std::filesystem::temp_directory_path() / "licol_bench.csv";
  std::filesystem::remove(csv);
  const CliResult res =
      run_cli("bench --sizes 10,20 --k 3 --csv " + csv.string());
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.out);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0].count("millis") == 0);
  const std::string table = read_file(csv.string());
  CHECK(table.rfind("size,states,millis\n", 0) == 0);
  std::filesystem::remove(csv);
}
