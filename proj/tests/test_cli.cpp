// End-to-end runs of the hardmap binary against frozen golden outputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "hardmap/closing.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("'") + HARDMAP_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("series and formula match their goldens") {
  RunResult plain = run_cli("series --order 10");
  CHECK(plain.code == 0);
  CHECK(plain.out == golden("series_10.txt"));

  RunResult json = run_cli("series --order 10 --format json");
  CHECK(json.code == 0);
  CHECK(json.out == golden("series_10.json"));

  RunResult one = run_cli("formula --n 1");
  CHECK(one.code == 0);
  CHECK(one.out == "1 + z\n");
  CHECK(run_cli("formula --n 5 --format json").out == golden("formula_5.json"));
}

TEST_CASE("census goldens for all modes and sizes") {
  for (int v = 2; v <= 10; v += 2)
    for (std::string mode : {"signed-admissible", "good", "maps"}) {
      std::string args = "census --vertices " + std::to_string(v) + " --mode " + mode +
                         " --format json" + (v > 8 ? " --allow-large" : "");
      CAPTURE(args);
      RunResult r = run_cli(args);
      CHECK(r.code == 0);
      CHECK(r.out == golden("census_" + std::to_string(v) + "_" + mode + ".json"));
    }
}

TEST_CASE("output is byte-identical across worker counts") {
  RunResult serial = run_cli("census --vertices 8 --mode maps --format json");
  RunResult parallel = run_cli("census --vertices 8 --mode maps --format json --threads 3");
  CHECK(serial.code == 0);
  CHECK(parallel.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("verification subcommands pass and match their goldens") {
  RunResult sumrule = run_cli("sumrule --vertices 6");
  CHECK(sumrule.code == 0);
  CHECK(sumrule.out == golden("sumrule_6.txt"));

  RunResult roundtrip = run_cli("roundtrip --vertices 6");
  CHECK(roundtrip.code == 0);
  CHECK(roundtrip.out == golden("roundtrip_6.txt"));

  RunResult all = run_cli("verify-all --max-vertices 8");
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out.find("PASS sumrule") != std::string::npos);
  CHECK(all.out.find("PASS growth-exponents") != std::string::npos);
}

TEST_CASE("ising and critical subcommands match their goldens") {
  CHECK(run_cli("ising --order 8").out == golden("ising_8.txt"));
  CHECK(run_cli("critical --z 1 --format json").out == golden("critical_z1.json"));
  CHECK(run_cli("critical --scan 0:40:4").out == golden("critical_scan.csv"));
  CHECK(run_cli("critical --z 0 --n 400").out == golden("growth_fit_z0.csv"));
}

TEST_CASE("theta map code is stable") {
  using namespace hardmap;
  PlanarMap theta = close_tree(BlossomTree::parse("W(l,l)"));
  CHECK(canonical_code(theta).to_string() + "\n" == golden("theta_code.txt"));
}

TEST_CASE("usage errors exit 2 with no stdout") {
  for (std::string args : {
           "census --vertices 10 --mode good",  // gated
           "census --vertices 7",               // odd size
           "census",                            // missing required option
           "census --vertices 6 --mode bogus",  // bad mode
           "nonsense",                          // unknown subcommand
           "",                                  // missing subcommand
           "critical --z 1/0",                  // bad rational
           "critical --scan 0:1",               // malformed scan
           "formula --n 0",                     // out of range
       }) {
    CAPTURE(args);
    RunResult r = run_cli(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
  }
  CHECK(run_cli("--help").code == 0);
}
