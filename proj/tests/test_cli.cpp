// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end tests that spawn the installed CLI binary and check its
// exit codes, stdout/stderr, and --out artifacts.  The binary path and
// bundled scenario directory come from the build system.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef OGTAME_CLI_PATH
#error "OGTAME_CLI_PATH must point at the CLI binary"
#endif
#ifndef OGTAME_SCENARIO_DIR
#error "OGTAME_SCENARIO_DIR must point at the bundled scenarios"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs the CLI with the given arguments through the shell, capturing
// both streams.  Arguments must already be shell-quoted where needed.
CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(++counter);
  const std::string out_file = "/tmp/ogtame_cli_out_" + tag;
  const std::string err_file = "/tmp/ogtame_cli_err_" + tag;
  const std::string cmd = std::string(OGTAME_CLI_PATH) + " " + args + " >" +
                          out_file + " 2>" + err_file;
  const int rc = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return r;
}

std::string scenario(const char* name) {
  return std::string(OGTAME_SCENARIO_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("version and help exit cleanly") {
  const CliResult v = run_cli("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("ogtame 1.0.0") != std::string::npos);
  const CliResult h = run_cli("--help");
  CHECK(h.exit_code == 0);
  for (const char* sub : {"run", "st", "decide-tame", "check-section",
                          "complement", "equivalence", "valuation", "residue",
                          "proptest"}) {
    CAPTURE(sub);
    CHECK(h.out.find(sub) != std::string::npos);
  }
}

TEST_CASE("run: passing scenario exits 0 with a PASS summary") {
  const CliResult r = run_cli("run " + scenario("theorem_demo.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ogtame report -- scenario theorem_demo") !=
        std::string::npos);
  CHECK(r.out.find("result: PASS (7 of 7 queries run)") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("run: expected-failure scenario exits 1 and shows witnesses") {
  const CliResult r = run_cli("run " + scenario("non_tame_demo.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("(as expected)") != std::string::npos);
  CHECK(r.out.find("(1*sqrt(2))") != std::string::npos);
  CHECK(r.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("run: unresolved references exit 2 with a diagnostic") {
  const CliResult r = run_cli("run " + scenario("bad_reference.json"));
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("error (unresolved_name): query #2 (st): "
                   "undefined subgroup 'ghost'") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);                       // no subcommand
  CHECK(run_cli("frobnicate x.json").exit_code == 2);      // unknown command
  CHECK(run_cli("run").exit_code == 2);                    // missing scenario
  CHECK(run_cli("run /nonexistent.json").exit_code == 2);  // io error
  CHECK(run_cli("run " + scenario("theorem_demo.json") + " --format pdf")
            .exit_code == 2);
  // st demands exactly one of the two argument pairs.
  const std::string t = scenario("theorem_demo.json");
  CHECK(run_cli("st " + t).exit_code == 2);
  CHECK(run_cli("st " + t + " --subgroup S").exit_code == 2);
  CHECK(run_cli("st " + t + " --subgroup S --series x").exit_code == 2);
}

TEST_CASE("st subcommand answers both query shapes") {
  const CliResult sub = run_cli("st " + scenario("theorem_demo.json") +
                                " --subgroup S --element '(1, 1/2)'");
  CHECK(sub.exit_code == 0);
  CHECK(sub.out.find("case Exact") != std::string::npos);

  const CliResult mono = run_cli("st " + scenario("hahn_demo.json") +
                                 " --group C2 --series '8*x^3 + x^1'");
  CHECK(mono.exit_code == 0);
  CHECK(mono.out.find("case NearestBelow") != std::string::npos);
  CHECK(mono.out.find("2^3*x^3") != std::string::npos);
}

TEST_CASE("structure subcommands run their single queries") {
  const std::string t = scenario("theorem_demo.json");
  CHECK(run_cli("decide-tame " + t + " --subgroup S").exit_code == 0);
  CHECK(run_cli("check-section " + t + " --morphism proj --subgroup S")
            .exit_code == 0);
  CHECK(run_cli("complement " + t + " --morphism sheared").exit_code == 0);
  const CliResult eq = run_cli("equivalence " + t +
                               " --morphism proj --subgroup S --cases 20");
  CHECK(eq.exit_code == 0);
  CHECK(eq.out.find("equivalence verdict: the three sides agree") !=
        std::string::npos);
}

TEST_CASE("valuation and residue subcommands") {
  const std::string h = scenario("hahn_demo.json");
  const CliResult v = run_cli("valuation " + h + " --series 'x^-2 + 5'");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("v = 0") != std::string::npos);
  CHECK(run_cli("valuation " + h + " --group M --cases 30").exit_code == 0);
  CHECK(run_cli("valuation " + h + " --series x --group M").exit_code == 2);

  CHECK(run_cli("residue " + h + " --series '5 + x^-1'").exit_code == 0);
  // Outside the valuation ring: a property failure, not a usage error.
  const CliResult bad = run_cli("residue " + h + " --series 'x^1 + 5'");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("outside the valuation ring") != std::string::npos);
}

TEST_CASE("proptest subcommand honors --cases") {
  const CliResult r = run_cli("proptest " + scenario("theorem_demo.json") +
                              " --cases 5 --size 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("proptest") != std::string::npos);
}

TEST_CASE("--out writes deterministic machine reports") {
  const std::string t = scenario("theorem_demo.json");
  const std::string f1 = "/tmp/ogtame_out_a.json";
  const std::string f2 = "/tmp/ogtame_out_b.json";
  CHECK(run_cli("run " + t + " --out " + f1).exit_code == 0);
  CHECK(run_cli("run " + t + " --out " + f2).exit_code == 0);
  const std::string a = slurp(f1);
  const std::string b = slurp(f2);
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.find("\"schema\": \"ogtame-report/1\"") != std::string::npos);
  CHECK(a.find("\"all_pass\": true") != std::string::npos);

  // Text copies match what went to stdout.
  const std::string f3 = "/tmp/ogtame_out_c.txt";
  const CliResult r = run_cli("run " + t + " --out " + f3 + " --format text");
  CHECK(r.exit_code == 0);
  CHECK(slurp(f3) == r.out);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
  std::remove(f3.c_str());
}
