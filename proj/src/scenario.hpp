// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_SCENARIO_HPP
#define OGTAME_SCENARIO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "morphism.hpp"
#include "report.hpp"
#include "subgroup.hpp"

namespace ogtame {

inline constexpr const char* kScenarioSchema = "ogtame-scenario/1";
inline constexpr const char* kReportSchema = "ogtame-report/1";

// One workbench command plus its raw arguments; validated when run.
struct Query {
  std::string op;
  OrderedJson body;
};

// A parsed scenario: one coefficient field, named contexts and
// structures, and an ordered query list. All names are resolved and
// all referenced contexts checked at load time.
struct Scenario {
  std::string name;
  Field field = Field::rationals();
  std::map<std::string, GroupCtx> ambients;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, Morphism> morphisms;
  std::map<std::string, MonomialGroup> monomial_groups;
  std::vector<Query> queries;
};

Scenario load_scenario(const std::string& text, const std::string& name);
Scenario load_scenario_file(const std::string& path);

struct RunOptions {
  uint64_t seed = 10;
  long cases = 200;
  bool fail_fast = false;
};

// Machine report (insertion-ordered JSON, numeric leaves as strings)
// plus the human rendering of the same content. all_pass drives the
// 0-vs-1 exit code; load or evaluation errors surface as exceptions
// and map to exit code 2.
struct ScenarioResult {
  OrderedJson machine;
  std::string text;
  bool all_pass = false;
};

ScenarioResult run_scenario(const Scenario& sc, const RunOptions& opt);

// Convenience for one-shot queries built programmatically.
ScenarioResult run_single_query(const Scenario& sc, const Query& q,
                                const RunOptions& opt);

}  // namespace ogtame

#endif  // OGTAME_SCENARIO_HPP
