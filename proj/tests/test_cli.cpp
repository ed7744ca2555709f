#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hsc/json_io.hpp"
#include "support/fixtures.hpp"

using namespace hsc;
using namespace hsc::testing;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(HSC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen writes a parsable hypergraph with metadata") {
  CliResult r = run_cli("--seed 4 gen --n 12 --k 4 --alpha 1.0");
  REQUIRE(r.exit_code == 0);
  Json meta;
  DirectedHypergraph h = read_hypergraph(r.out, &meta);
  CHECK(h.num_nodes() == 12);
  CHECK(h.num_state_edges() == 12);
  CHECK(meta["generator"] == "uniform");
  CHECK(meta["seed"] == 4);

  // --out writes exactly the stdout bytes
  CliResult f = run_cli("--seed 4 --out cli_gen.json gen --n 12 --k 4 --alpha 1.0");
  REQUIRE(f.exit_code == 0);
  CHECK(slurp("cli_gen.json") == r.out);
  std::remove("cli_gen.json");
}

TEST_CASE("verify reports the certificate pieces") {
  save_hypergraph_file(example_pair(), "cli_example.json");
  CliResult r = run_cli("verify --input cli_example.json --drivers 1 --dilation both");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["controllable"] == true);
  CHECK(j["accessibility_ok"] == true);
  CHECK(j["dilation_free"] == true);
  CHECK(j["drivers"] == Json::array({1}));
  CHECK(j["accessible"] == Json::array({1, 2, 3}));
  CHECK(j["dilation"]["agree"] == true);

  CliResult miss = run_cli("verify --input cli_example.json --drivers 2");
  Json jm = Json::parse(miss.out);
  CHECK(jm["controllable"] == false);
  CHECK(jm["inaccessible"] == Json::array({1, 3}));

  CliResult tgt = run_cli(
      "verify --input cli_example.json --drivers 1 --targets 3");
  Json jt = Json::parse(tgt.out);
  CHECK(jt["targets_accessible"] == true);
  std::remove("cli_example.json");
}

TEST_CASE("select emits drivers, bound and steps per method") {
  save_hypergraph_file(multi_head_pair(), "cli_mh.json");
  for (std::string method : {"matching", "greedy", "mag", "optimal"}) {
    CliResult r = run_cli("select --input cli_mh.json --method " + method);
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["method"] == method);
    CHECK(j["lower_bound"] == 2);
    CHECK(j["num_drivers"] == j["drivers"].size());
    if (method != "matching") CHECK(j["controllable"] == true);
  }
  std::remove("cli_mh.json");
}

TEST_CASE("oracle agrees with the verifier on the example") {
  save_hypergraph_file(example_pair(), "cli_oracle.json");
  CliResult r = run_cli(
      "--seed 6 oracle --input cli_oracle.json --drivers 1 --trials 5");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["structural_verdict"] == true);
  CHECK(j["fraction_full_rank"] == 1.0);
  CHECK(j["per_trial_ranks"].size() == 5);
  std::remove("cli_oracle.json");
}

TEST_CASE("experiment and bench write the documented tables") {
  CliResult small = run_cli(
      "--seed 3 experiment --k 4 --alpha 1.0 --n 8 --methods matching,mag "
      "--trials 2 small");
  REQUIRE(small.exit_code == 0);
  CHECK(small.out.rfind("experiment,k,alpha,n,topology,method,trial,seed,"
                        "num_drivers,lower_bound,controllable,runtime_ms\n",
                        0) == 0);

  CliResult js = run_cli(
      "--seed 3 --format json experiment --k 4 --alpha 1.0 --n 8 "
      "--methods mag --trials 1 small");
  REQUIRE(js.exit_code == 0);
  Json j = Json::parse(js.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["method"] == "mag");
  CHECK(j[0]["experiment"] == "small_scale");

  CliResult bench = run_cli(
      "--seed 3 bench --n 64 --methods mag --trials 1");
  REQUIRE(bench.exit_code == 0);
  CHECK(bench.out.rfind("experiment,", 0) == 0);
  CHECK(bench.out.find("structure_bytes") != std::string::npos);

  CliResult structured = run_cli(
      "--seed 3 experiment --n 24 --topology scale_free --trials 1 "
      "structured --nodes-out cli_nodes.csv");
  REQUIRE(structured.exit_code == 0);
  CHECK(structured.out.rfind("experiment,topology,", 0) == 0);
  std::string nodes = slurp("cli_nodes.csv");
  CHECK(nodes.rfind("experiment,topology,k,alpha,n,trial,seed,node,", 0) == 0);
  std::remove("cli_nodes.csv");
}

TEST_CASE("exit codes distinguish usage, validation and capacity errors") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("gen").exit_code == 2);  // --n is required
  // bad file
  CHECK(run_cli("verify --input does_not_exist.json").exit_code == 2);
  // capacity: optimal above the subset cap
  CliResult big = run_cli("--seed 2 --out cli_big.json gen --n 13 --k 4");
  REQUIRE(big.exit_code == 0);
  CHECK(run_cli("select --input cli_big.json --method optimal").exit_code == 3);
  std::remove("cli_big.json");
  // csv format is rejected where only json exists
  CHECK(run_cli("--format csv gen --n 8 --k 4").exit_code == 2);
}

TEST_CASE("fixed seeds give byte identical reruns") {
  std::string cmd = "--seed 12 gen --topology small_world --n 30 --k 4 --alpha 1.5";
  CliResult a = run_cli(cmd);
  CliResult b = run_cli(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}
