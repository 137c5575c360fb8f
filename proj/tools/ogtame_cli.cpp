// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

// Command-line workbench over the ogtame C API.  Subcommands either run a
// scenario's own query list (`run`) or run one ad-hoc query against the
// definitions in a scenario file.  The human-readable report always goes to
// standard output; --out writes a machine-readable (or text) copy.
//
// Exit codes: 0 all queries passed, 1 a property or expectation failed,
// 2 malformed input, unresolved names, or other errors.

#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ogtame/ogtame.h"

namespace {

using QueryJson = nlohmann::ordered_json;

struct CommonFlags {
  std::string scenario_path;
  uint64_t seed = 10;
  long cases = 200;
  std::string out_path;
  std::string format = "machine";
  bool fail_fast = false;
};

int fail_with_status(ogt_status s) {
  std::fprintf(stderr, "error (%s): %s\n", ogt_status_name(s),
               ogt_last_error());
  return 2;
}

// Prints the text report, optionally writes --out, frees the report, and
// maps the verdict to an exit code.
int emit_report(ogt_report* rep, const CommonFlags& flags) {
  std::fputs(ogt_report_text(rep), stdout);
  if (!flags.out_path.empty()) {
    std::ofstream out(flags.out_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error (io_error): cannot write '%s'\n",
                   flags.out_path.c_str());
      ogt_report_free(rep);
      return 2;
    }
    out << (flags.format == "text" ? ogt_report_text(rep)
                                   : ogt_report_json(rep));
  }
  const int ok = ogt_report_all_pass(rep);
  ogt_report_free(rep);
  return ok ? 0 : 1;
}

// Loads the scenario file and runs either its query list (query is null) or
// the given single query.
int run_with_scenario(const CommonFlags& flags, const QueryJson& query) {
  ogt_scenario* sc = nullptr;
  ogt_status s = ogt_scenario_load_file(flags.scenario_path.c_str(), &sc);
  if (s != OGT_OK) return fail_with_status(s);

  ogt_run_options opt;
  ogt_run_options_init(&opt);
  opt.seed = flags.seed;
  opt.cases = flags.cases;
  opt.fail_fast = flags.fail_fast ? 1 : 0;

  ogt_report* rep = nullptr;
  if (query.is_null()) {
    s = ogt_scenario_run(sc, &opt, &rep);
  } else {
    s = ogt_scenario_query(sc, query.dump().c_str(), &opt, &rep);
  }
  ogt_scenario_free(sc);
  if (s != OGT_OK) return fail_with_status(s);
  return emit_report(rep, flags);
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("scenario", flags.scenario_path,
                  "Scenario file with the definitions to use")
      ->required();
  cmd->add_option("--seed", flags.seed, "Base seed for sampled checks");
  cmd->add_option("--cases", flags.cases,
                  "Default sample budget per sampled check");
  cmd->add_option("--out", flags.out_path,
                  "Write a copy of the report to this file");
  cmd->add_option("--format", flags.format,
                  "Format of the --out copy (stdout is always text)")
      ->check(CLI::IsMember({"text", "machine"}));
  cmd->add_flag("--fail-fast", flags.fail_fast,
                "Stop after the first failing query");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Workbench for standard-part maps, tameness certificates, "
      "cross-sections, and induced valuations on Hahn series fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("ogtame ") + ogt_version());

  CommonFlags flags;
  int exit_code = 0;
  auto dispatch = [&](const QueryJson& q) { exit_code = run_with_scenario(flags, q); };

  CLI::App* run = app.add_subcommand("run", "Run the scenario's query list");
  add_common(run, flags);
  run->callback([&] { dispatch(QueryJson()); });

  CLI::App* st = app.add_subcommand(
      "st", "Standard part of an element (or a series) relative to a "
            "subgroup (or a monomial group)");
  add_common(st, flags);
  std::string st_subgroup, st_element, st_group, st_series;
  st->add_option("--subgroup", st_subgroup, "Named subgroup");
  st->add_option("--element", st_element, "Ambient element, e.g. \"(1, 1/2)\"");
  st->add_option("--group", st_group, "Named monomial group");
  st->add_option("--series", st_series, "Series, e.g. \"x^-1 + 2\"");
  st->callback([&] {
    QueryJson q;
    q["op"] = "st";
    if (!st_group.empty() || !st_series.empty()) {
      if (st_group.empty() || st_series.empty() || !st_subgroup.empty() ||
          !st_element.empty()) {
        throw CLI::ValidationError(
            "st", "pass either --subgroup with --element, or --group with "
                  "--series");
      }
      q["group"] = st_group;
      q["series"] = st_series;
    } else {
      if (st_subgroup.empty() || st_element.empty()) {
        throw CLI::ValidationError(
            "st", "pass either --subgroup with --element, or --group with "
                  "--series");
      }
      q["subgroup"] = st_subgroup;
      q["element"] = st_element;
    }
    dispatch(q);
  });

  CLI::App* tame = app.add_subcommand(
      "decide-tame", "Decide tameness of a divisible subgroup, with witness");
  add_common(tame, flags);
  std::string tame_subgroup;
  tame->add_option("--subgroup", tame_subgroup, "Named subgroup")->required();
  tame->callback([&] {
    QueryJson q;
    q["op"] = "decide-tame";
    q["subgroup"] = tame_subgroup;
    dispatch(q);
  });

  CLI::App* sect = app.add_subcommand(
      "check-section", "Check that a subgroup is the image of a "
                       "cross-section of a morphism");
  add_common(sect, flags);
  std::string sect_morphism, sect_subgroup;
  sect->add_option("--morphism", sect_morphism, "Named morphism")->required();
  sect->add_option("--subgroup", sect_subgroup, "Named subgroup")->required();
  sect->callback([&] {
    QueryJson q;
    q["op"] = "check-section";
    q["morphism"] = sect_morphism;
    q["subgroup"] = sect_subgroup;
    dispatch(q);
  });

  CLI::App* comp = app.add_subcommand(
      "complement", "Construct a complement of the kernel of a morphism and "
                    "verify it is a cross-section image");
  add_common(comp, flags);
  std::string comp_morphism;
  comp->add_option("--morphism", comp_morphism, "Named morphism")->required();
  comp->callback([&] {
    QueryJson q;
    q["op"] = "complement";
    q["morphism"] = comp_morphism;
    dispatch(q);
  });

  CLI::App* equiv = app.add_subcommand(
      "equivalence", "Check the three equivalent characterizations of "
                     "cross-section images for a morphism and a subgroup");
  add_common(equiv, flags);
  std::string equiv_morphism, equiv_subgroup;
  equiv->add_option("--morphism", equiv_morphism, "Named morphism")
      ->required();
  equiv->add_option("--subgroup", equiv_subgroup, "Named subgroup")
      ->required();
  equiv->callback([&] {
    QueryJson q;
    q["op"] = "equivalence";
    q["morphism"] = equiv_morphism;
    q["subgroup"] = equiv_subgroup;
    dispatch(q);
  });

  CLI::App* val = app.add_subcommand(
      "valuation", "Leading-exponent valuation of a series, or the induced "
                   "valuation suite for a monomial group");
  add_common(val, flags);
  std::string val_series, val_group;
  bool val_checks = false;
  val->add_option("--series", val_series, "Series to evaluate");
  val->add_option("--group", val_group,
                  "Named monomial group for the induced-valuation suite");
  val->add_flag("--checks", val_checks,
                "Also run the valuation compatibility checks (with --series)");
  val->callback([&] {
    QueryJson q;
    if (!val_group.empty()) {
      if (!val_series.empty()) {
        throw CLI::ValidationError("valuation",
                                   "pass --series or --group, not both");
      }
      q["op"] = "induced-valuation";
      q["group"] = val_group;
    } else {
      if (val_series.empty()) {
        throw CLI::ValidationError("valuation",
                                   "pass --series or --group");
      }
      q["op"] = "valuation";
      q["series"] = val_series;
      if (val_checks) q["checks"] = QueryJson::object();
    }
    dispatch(q);
  });

  CLI::App* res = app.add_subcommand(
      "residue", "Residue of a series in the valuation ring");
  add_common(res, flags);
  std::string res_series;
  res->add_option("--series", res_series, "Series to evaluate")->required();
  res->callback([&] {
    QueryJson q;
    q["op"] = "residue";
    q["series"] = res_series;
    dispatch(q);
  });

  CLI::App* prop = app.add_subcommand(
      "proptest", "Run the generator and shrinking invariants");
  add_common(prop, flags);
  std::string prop_ambient;
  long prop_size = 6;
  prop->add_option("--ambient", prop_ambient,
                   "Restrict to one named ambient group");
  prop->add_option("--size", prop_size, "Size budget for generated values");
  prop->callback([&] {
    QueryJson q;
    q["op"] = "proptest";
    if (!prop_ambient.empty()) q["ambient"] = prop_ambient;
    q["size"] = prop_size;
    q["cases"] = flags.cases;
    dispatch(q);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}
