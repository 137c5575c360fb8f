// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

namespace ogtame {

namespace {

const char* mark(bool pass) { return pass ? "[ok]  " : "[FAIL]"; }

}  // namespace

OrderedJson check_to_json(const CheckResult& c) {
  OrderedJson j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["evaluated"] = c.evaluated;
  j["samples"] = std::to_string(c.samples);
  if (!c.note.empty()) j["note"] = c.note;
  if (!c.witnesses.empty()) j["witnesses"] = c.witnesses;
  return j;
}

std::string check_to_text(const CheckResult& c) {
  std::string line;
  if (!c.evaluated) {
    line = "[skip] " + c.name;
  } else {
    line = std::string(mark(c.pass)) + " " + c.name;
    if (c.samples > 0) line += " (" + std::to_string(c.samples) + " samples)";
  }
  if (!c.note.empty()) line += " -- " + c.note;
  for (const auto& w : c.witnesses) line += "\n        witness: " + w;
  return line;
}

OrderedJson st_to_json(const StResult& r) {
  OrderedJson j;
  j["case"] = st_case_name(r.kind);
  if (r.value.has_value()) j["value"] = format_element(*r.value);
  if (r.residual.has_value()) j["residual"] = format_element(*r.residual);
  if (r.certificate.has_value()) {
    j["certificate"] = format_element(*r.certificate);
  }
  return j;
}

std::string st_to_text(const StResult& r) {
  std::string s = std::string("case ") + st_case_name(r.kind);
  if (r.value.has_value()) s += ", value " + format_element(*r.value);
  if (r.residual.has_value()) s += ", residual " + format_element(*r.residual);
  if (r.certificate.has_value()) {
    s += ", certificate " + format_element(*r.certificate);
  }
  return s;
}

OrderedJson tame_to_json(const TameResult& r) {
  OrderedJson j;
  j["tame"] = r.tame;
  if (r.witness.has_value()) j["witness"] = format_element(*r.witness);
  return j;
}

std::string tame_to_text(const TameResult& r) {
  if (r.tame) return "Tame";
  std::string s = "NotTame";
  if (r.witness.has_value()) s += ", witness " + format_element(*r.witness);
  return s;
}

OrderedJson section_to_json(const SectionCheck& r) {
  OrderedJson j;
  j["yes"] = r.yes;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

std::string section_to_text(const SectionCheck& r) {
  if (r.yes) return "Yes";
  return "No: " + r.reason;
}

OrderedJson equivalence_to_json(const EquivalenceReport& r) {
  OrderedJson j;
  OrderedJson checks = OrderedJson::array();
  for (const CheckResult* c : r.checks()) checks.push_back(check_to_json(*c));
  j["checks"] = checks;
  j["side_a"] = r.side_a;
  j["side_b_and_c"] = r.side_bc;
  j["side_b_and_d"] = r.side_bd;
  j["verdict"] = r.verdict;
  j["all_pass"] = r.all_pass;
  return j;
}

std::string equivalence_to_text(const EquivalenceReport& r) {
  std::string out;
  for (const CheckResult* c : r.checks()) {
    out += "  " + check_to_text(*c) + "\n";
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out += std::string("  sides: (a) ") + yn(r.side_a) + ", (b and c) " +
         yn(r.side_bc) + ", (b and d) " + yn(r.side_bd) + "\n";
  out += std::string("  equivalence verdict: ") +
         (r.verdict ? "the three sides agree" : "the sides DISAGREE") + "\n";
  out += std::string("  all evaluated checks pass: ") + yn(r.all_pass);
  return out;
}

OrderedJson valuation_report_to_json(const ValuationReport& r) {
  OrderedJson j;
  j["header"] = r.header;
  OrderedJson checks = OrderedJson::array();
  for (const CheckResult& c : r.checks) checks.push_back(check_to_json(c));
  j["checks"] = checks;
  j["all_pass"] = r.all_pass;
  return j;
}

std::string valuation_report_to_text(const ValuationReport& r) {
  std::string out = "  note: " + r.header + "\n";
  for (const CheckResult& c : r.checks) out += "  " + check_to_text(c) + "\n";
  out += std::string("  all checks pass: ") + (r.all_pass ? "yes" : "no");
  return out;
}

OrderedJson mono_st_to_json(const MonomialGroup& g, const MonoSt& r) {
  OrderedJson j;
  j["case"] = st_case_name(r.kind);
  if (r.value.has_value()) j["value"] = format_mono(g, *r.value);
  if (r.residual.has_value()) j["residual"] = format_scalar(*r.residual);
  if (r.bracket.has_value()) j["bracket_power"] = r.bracket->to_string();
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string mono_st_to_text(const MonomialGroup& g, const MonoSt& r) {
  std::string s = std::string("case ") + st_case_name(r.kind);
  if (r.value.has_value()) s += ", value " + format_mono(g, *r.value);
  if (r.residual.has_value()) s += ", residual " + format_scalar(*r.residual);
  if (r.bracket.has_value()) {
    s += ", bracketing power " + r.bracket->to_string();
  }
  if (!r.note.empty()) s += " -- " + r.note;
  return s;
}

}  // namespace ogtame
