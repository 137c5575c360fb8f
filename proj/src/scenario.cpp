// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "errors.hpp"
#include "generate.hpp"
#include "tame.hpp"

namespace ogtame {

namespace {

const OrderedJson& need(const OrderedJson& obj, const char* key,
                        const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail(ErrorCode::schema_error, where + " needs key '" + key + "'");
  }
  return obj.at(key);
}

std::string need_string(const OrderedJson& obj, const char* key,
                        const std::string& where) {
  const OrderedJson& v = need(obj, key, where);
  if (!v.is_string()) {
    fail(ErrorCode::schema_error,
         where + " key '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

long need_int(const OrderedJson& obj, const char* key,
              const std::string& where) {
  const OrderedJson& v = need(obj, key, where);
  if (!v.is_number_integer()) {
    fail(ErrorCode::schema_error,
         where + " key '" + key + "' must be an integer");
  }
  return v.get<long>();
}

long opt_int(const OrderedJson& obj, const char* key, long fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  const OrderedJson& v = obj.at(key);
  if (!v.is_number_integer()) {
    fail(ErrorCode::schema_error,
         std::string("key '") + key + "' must be an integer");
  }
  return v.get<long>();
}

const GroupCtx& find_ambient(const Scenario& sc, const std::string& name) {
  auto it = sc.ambients.find(name);
  if (it == sc.ambients.end()) {
    fail(ErrorCode::unresolved_name, "undefined ambient '" + name + "'");
  }
  return it->second;
}

const Subgroup& find_subgroup(const Scenario& sc, const std::string& name) {
  auto it = sc.subgroups.find(name);
  if (it == sc.subgroups.end()) {
    fail(ErrorCode::unresolved_name, "undefined subgroup '" + name + "'");
  }
  return it->second;
}

const Morphism& find_morphism(const Scenario& sc, const std::string& name) {
  auto it = sc.morphisms.find(name);
  if (it == sc.morphisms.end()) {
    fail(ErrorCode::unresolved_name, "undefined morphism '" + name + "'");
  }
  return it->second;
}

const MonomialGroup& find_monomial_group(const Scenario& sc,
                                         const std::string& name) {
  auto it = sc.monomial_groups.find(name);
  if (it == sc.monomial_groups.end()) {
    fail(ErrorCode::unresolved_name,
         "undefined monomial group '" + name + "'");
  }
  return it->second;
}

Rational parse_rational_field(const OrderedJson& v, const std::string& where) {
  if (!v.is_string()) {
    fail(ErrorCode::schema_error,
         where + " must be a rational written as a string");
  }
  return Rational::parse(v.get<std::string>());
}

MorphismStage parse_stage(const OrderedJson& spec, const std::string& where) {
  const std::string kind = need_string(spec, "kind", where);
  if (kind == "projection") {
    return MorphismStage::projection(
        static_cast<int>(need_int(spec, "keep", where)));
  }
  if (kind == "hahn_truncate") {
    return MorphismStage::hahn_truncate(
        parse_rational_field(need(spec, "cut", where), where + " cut"));
  }
  if (kind == "shear") {
    const OrderedJson& rows = need(spec, "matrix", where);
    if (!rows.is_array()) {
      fail(ErrorCode::schema_error, where + " matrix must be an array");
    }
    RatMatrix m;
    for (const auto& row : rows) {
      if (!row.is_array()) {
        fail(ErrorCode::schema_error, where + " matrix rows must be arrays");
      }
      std::vector<Rational> r;
      for (const auto& cell : row) {
        r.push_back(parse_rational_field(cell, where + " matrix entry"));
      }
      m.push_back(std::move(r));
    }
    return MorphismStage::make_shear(std::move(m));
  }
  fail(ErrorCode::schema_error, where + " has unknown stage kind '" + kind +
                                    "'");
}

// Deduplicated context notes shown in the report header block.
void add_note(std::vector<std::string>& notes, const std::string& n) {
  if (std::find(notes.begin(), notes.end(), n) == notes.end()) {
    notes.push_back(n);
  }
}

struct Outcome {
  OrderedJson entry;
  std::string text;
  bool pass = true;
};

// Golden expectations from the query's optional "expect" object; each
// present key must match the computed value exactly.
class Expectation {
 public:
  explicit Expectation(const OrderedJson& body) {
    if (body.is_object() && body.contains("expect")) {
      spec_ = body.at("expect");
      if (!spec_.is_object()) {
        fail(ErrorCode::schema_error, "'expect' must be an object");
      }
    }
  }

  void check(const std::string& key, const OrderedJson& got) {
    if (!spec_.is_object() || !spec_.contains(key)) return;
    ++checked_;
    if (spec_.at(key) != got) {
      OrderedJson d;
      d["key"] = key;
      d["expected"] = spec_.at(key);
      d["got"] = got;
      diffs_.push_back(d);
    }
  }

  bool active() const { return spec_.is_object(); }
  bool ok() const { return diffs_.empty(); }
  bool any_checked() const { return checked_ > 0; }
  const std::vector<OrderedJson>& diffs() const { return diffs_; }

 private:
  OrderedJson spec_;
  std::vector<OrderedJson> diffs_;
  int checked_ = 0;
};

void finalize(Outcome& out, const std::string& head, const std::string& detail,
              bool intrinsic, const Expectation& exp,
              const std::string& extra_block = "") {
  const bool expected_failure = !intrinsic && exp.ok() && exp.any_checked();
  out.pass = intrinsic && exp.ok();
  out.entry["pass"] = out.pass;
  if (exp.active()) {
    out.entry["expect_ok"] = exp.ok();
    if (!exp.ok()) out.entry["expect_diffs"] = exp.diffs();
    if (expected_failure) out.entry["as_expected"] = true;
  }
  out.text = std::string(out.pass ? "[ok]  " : "[FAIL]") + " " + head +
             " -> " + detail;
  if (expected_failure) out.text += " (as expected)";
  if (!exp.ok()) {
    for (const auto& d : exp.diffs()) {
      out.text += "\n        expectation '" + d.at("key").get<std::string>() +
                  "': expected " + d.at("expected").dump() + ", got " +
                  d.at("got").dump();
    }
  }
  out.text += "\n";
  if (!extra_block.empty()) out.text += extra_block + "\n";
}

Outcome op_st(const Scenario& sc, const OrderedJson& body,
              const RunOptions&) {
  Outcome o;
  const std::string sname = need_string(body, "subgroup", "st query");
  const Subgroup& s = find_subgroup(sc, sname);
  const GroupElement b =
      parse_element(s.ambient(), need_string(body, "element", "st query"));
  const StResult r = standard_part(s, b);
  o.entry["op"] = "st";
  o.entry["subgroup"] = sname;
  o.entry["element"] = format_element(b);
  o.entry["result"] = st_to_json(r);
  Expectation exp(body);
  exp.check("case", st_case_name(r.kind));
  if (r.value.has_value()) exp.check("value", format_element(*r.value));
  const bool intrinsic = r.kind != StCase::no_nearest;
  finalize(o, "st " + sname + " of " + format_element(b), st_to_text(r),
           intrinsic, exp);
  return o;
}

Outcome op_decide_tame(const Scenario& sc, const OrderedJson& body,
                       const RunOptions&) {
  Outcome o;
  const std::string sname = need_string(body, "subgroup", "decide-tame query");
  const Subgroup& s = find_subgroup(sc, sname);
  const TameResult r = decide_tame(s);
  o.entry["op"] = "decide_tame";
  o.entry["subgroup"] = sname;
  o.entry["result"] = tame_to_json(r);
  Expectation exp(body);
  exp.check("tame", r.tame);
  if (r.witness.has_value()) exp.check("witness", format_element(*r.witness));
  finalize(o, "decide-tame " + sname, tame_to_text(r), r.tame, exp);
  return o;
}

Outcome op_check_section(const Scenario& sc, const OrderedJson& body,
                         const RunOptions&) {
  Outcome o;
  const std::string fname =
      need_string(body, "morphism", "check-section query");
  const std::string sname =
      need_string(body, "subgroup", "check-section query");
  const SectionCheck r =
      check_cross_section(find_morphism(sc, fname), find_subgroup(sc, sname));
  o.entry["op"] = "check_section";
  o.entry["morphism"] = fname;
  o.entry["subgroup"] = sname;
  o.entry["result"] = section_to_json(r);
  Expectation exp(body);
  exp.check("yes", r.yes);
  finalize(o, "check-section " + fname + " with " + sname, section_to_text(r),
           r.yes, exp);
  return o;
}

Outcome op_complement(const Scenario& sc, const OrderedJson& body,
                      const RunOptions&) {
  Outcome o;
  const std::string fname = need_string(body, "morphism", "complement query");
  const Morphism& f = find_morphism(sc, fname);
  const Subgroup delta = complement_of_kernel(f);
  o.entry["op"] = "complement";
  o.entry["morphism"] = fname;
  OrderedJson gens = OrderedJson::array();
  for (const GroupElement& g : delta.basis()) gens.push_back(format_element(g));
  OrderedJson result;
  result["generators"] = gens;
  const SectionCheck ver = check_cross_section(f, delta);
  result["cross_section"] = section_to_json(ver);
  o.entry["result"] = result;
  Expectation exp(body);
  exp.check("yes", ver.yes);
  finalize(o, "complement of ker " + fname,
           "span of " + std::to_string(delta.dim()) +
               " generators; cross-section " + section_to_text(ver),
           ver.yes, exp);
  return o;
}

Outcome op_equivalence(const Scenario& sc, const OrderedJson& body,
                       const RunOptions& opt) {
  Outcome o;
  const std::string fname = need_string(body, "morphism", "equivalence query");
  const std::string sname = need_string(body, "subgroup", "equivalence query");
  const long cases = opt_int(body, "cases", opt.cases);
  const EquivalenceReport r = equivalence_report(
      find_morphism(sc, fname), find_subgroup(sc, sname), opt.seed, cases);
  o.entry["op"] = "equivalence";
  o.entry["morphism"] = fname;
  o.entry["subgroup"] = sname;
  o.entry["cases"] = std::to_string(cases);
  o.entry["result"] = equivalence_to_json(r);
  Expectation exp(body);
  exp.check("verdict", r.verdict);
  exp.check("all_pass", r.all_pass);
  std::string detail =
      std::string("verdict ") + (r.verdict ? "agrees" : "DISAGREES") +
      std::string(r.all_pass ? ", every evaluated check passes"
                             : ", some evaluated check fails");
  finalize(o, "equivalence " + fname + " with " + sname, detail, r.all_pass,
           exp, equivalence_to_text(r));
  return o;
}

Outcome op_st_mono(const Scenario& sc, const OrderedJson& body,
                   const RunOptions&, std::vector<std::string>& notes) {
  Outcome o;
  const std::string gname = need_string(body, "group", "st query");
  const MonomialGroup& g = find_monomial_group(sc, gname);
  const Series r = parse_series(sc.field, need_string(body, "series",
                                                      "st query"));
  const MonoSt st = st_positive(g, r);
  add_note(notes, series_report_header(sc.field));
  o.entry["op"] = "st_mono";
  o.entry["group"] = gname;
  o.entry["series"] = format_series(r);
  o.entry["result"] = mono_st_to_json(g, st);
  Expectation exp(body);
  exp.check("case", st_case_name(st.kind));
  if (st.value.has_value()) exp.check("value", format_mono(g, *st.value));
  const bool intrinsic = st.kind != StCase::no_nearest;
  finalize(o, "st " + gname + " of " + format_series(r),
           mono_st_to_text(g, st), intrinsic, exp);
  return o;
}

Outcome op_valuation(const Scenario& sc, const OrderedJson& body,
                     const RunOptions& opt, std::vector<std::string>& notes) {
  Outcome o;
  const Series a =
      parse_series(sc.field, need_string(body, "series", "valuation query"));
  const Rational v = valuation(a);
  o.entry["op"] = "valuation";
  o.entry["series"] = format_series(a);
  o.entry["value"] = v.to_string();
  Expectation exp(body);
  exp.check("value", v.to_string());
  bool intrinsic = true;
  std::string extra;
  if (body.contains("checks")) {
    const long cases = opt_int(body.at("checks"), "cases", opt.cases);
    const ValuationReport rep = v_compat_check(sc.field, opt.seed, cases);
    add_note(notes, rep.header);
    o.entry["checks_report"] = valuation_report_to_json(rep);
    intrinsic = rep.all_pass;
    extra = valuation_report_to_text(rep);
  }
  finalize(o, "valuation of " + format_series(a), "v = " + v.to_string(),
           intrinsic, exp, extra);
  return o;
}

Outcome op_induced_valuation(const Scenario& sc, const OrderedJson& body,
                             const RunOptions& opt,
                             std::vector<std::string>& notes) {
  Outcome o;
  const std::string gname =
      need_string(body, "group", "induced-valuation query");
  const MonomialGroup& g = find_monomial_group(sc, gname);
  const long cases = opt_int(body, "cases", opt.cases);
  const ValuationReport rep = induced_valuation_check(g, opt.seed, cases);
  add_note(notes, rep.header);
  o.entry["op"] = "induced_valuation";
  o.entry["group"] = gname;
  o.entry["cases"] = std::to_string(cases);
  o.entry["result"] = valuation_report_to_json(rep);
  Expectation exp(body);
  exp.check("all_pass", rep.all_pass);
  finalize(o, "induced-valuation " + gname + " (" + g.describe() + ")",
           rep.all_pass ? "all checks pass" : "some check fails", rep.all_pass,
           exp, valuation_report_to_text(rep));
  return o;
}

Outcome op_residue(const Scenario& sc, const OrderedJson& body,
                   const RunOptions&, std::vector<std::string>& notes) {
  Outcome o;
  const Series a =
      parse_series(sc.field, need_string(body, "series", "residue query"));
  add_note(notes, series_report_header(sc.field));
  o.entry["op"] = "residue";
  o.entry["series"] = format_series(a);
  Expectation exp(body);
  try {
    const Scalar r = residue(a);
    o.entry["value"] = format_scalar(r);
    exp.check("value", format_scalar(r));
    exp.check("in_ring", true);
    finalize(o, "residue of " + format_series(a), "value " + format_scalar(r),
             true, exp);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_in_valuation_ring) throw;
    o.entry["error"] = e.what();
    exp.check("in_ring", false);
    finalize(o, "residue of " + format_series(a),
             std::string("outside the valuation ring: ") + e.what(), false,
             exp);
  }
  return o;
}

Outcome op_proptest(const Scenario& sc, const OrderedJson& body,
                    const RunOptions& opt) {
  Outcome o;
  const long cases = opt_int(body, "cases", 25);
  GenConfig cfg{opt.seed, static_cast<int>(opt_int(body, "size", 6))};
  std::vector<std::pair<std::string, const GroupCtx*>> targets;
  if (body.contains("ambient")) {
    const std::string aname = need_string(body, "ambient", "proptest query");
    targets.emplace_back(aname, &find_ambient(sc, aname));
  } else {
    for (const auto& [nm, ctx] : sc.ambients) targets.emplace_back(nm, &ctx);
  }
  o.entry["op"] = "proptest";
  o.entry["cases"] = std::to_string(cases);

  std::vector<CheckResult> checks;
  {
    CheckResult c;
    c.name = "generated subgroups contain their basis and echelonize "
             "idempotently";
    SampleStats st;
    for (const auto& [nm, ctx] : targets) {
      for (long i = 0; i < cases; ++i) {
        ++st.total;
        Subgroup s = gen_subgroup(*ctx, Ring::q, cfg, static_cast<uint64_t>(i));
        bool ok = true;
        for (const GroupElement& g : s.basis()) ok = ok && s.contains(g);
        Subgroup re(*ctx, s.basis(), Ring::q);
        ok = ok && re.dim() == s.dim();
        for (int k = 0; ok && k < s.dim(); ++k) {
          ok = g_eq(re.basis()[static_cast<size_t>(k)],
                    s.basis()[static_cast<size_t>(k)]);
        }
        if (!ok) st.fail_case("ambient " + nm + ", index " +
                              std::to_string(i));
      }
    }
    finish_check(c, st);
    checks.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "generated graph sections pass the cross-section check";
    SampleStats st;
    const long morph_cases = std::min<long>(cases, 5);
    for (const auto& [nm, ctx] : targets) {
      if (ctx->kind != GroupCtx::Kind::lex) continue;
      for (long i = 0; i < morph_cases; ++i) {
        ++st.total;
        Morphism f = gen_morphism(*ctx, cfg, static_cast<uint64_t>(i));
        Subgroup s = gen_graph_section(f, cfg, static_cast<uint64_t>(i));
        SectionCheck chk = check_cross_section(f, s);
        if (!chk.yes) {
          st.fail_case("ambient " + nm + ", index " + std::to_string(i) +
                       ": " + chk.reason);
        }
      }
    }
    finish_check(c, st);
    checks.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "regeneration with the same seed and index is identical";
    SampleStats st;
    for (const auto& [nm, ctx] : targets) {
      for (long i = 0; i < cases; ++i) {
        ++st.total;
        const auto idx = static_cast<uint64_t>(i);
        bool ok = g_eq(gen_element(*ctx, cfg, idx), gen_element(*ctx, cfg, idx));
        ok = ok && s_eq(gen_scalar(ctx->field, cfg, idx),
                        gen_scalar(ctx->field, cfg, idx));
        ok = ok && ser_eq(gen_series(ctx->field, cfg, idx),
                          gen_series(ctx->field, cfg, idx));
        if (!ok) st.fail_case("ambient " + nm + ", index " +
                              std::to_string(i));
      }
    }
    finish_check(c, st);
    checks.push_back(std::move(c));
  }

  OrderedJson arr = OrderedJson::array();
  bool all = true;
  std::string block;
  for (const CheckResult& c : checks) {
    arr.push_back(check_to_json(c));
    block += "  " + check_to_text(c) + "\n";
    all = all && c.pass;
  }
  if (!block.empty()) block.pop_back();
  o.entry["checks"] = arr;
  Expectation exp(body);
  finalize(o, "proptest",
           all ? "generation and shrinking invariants hold"
               : "a generation invariant fails",
           all, exp, block);
  return o;
}

Outcome run_query(const Scenario& sc, const Query& q, const RunOptions& opt,
                  std::vector<std::string>& notes) {
  std::string op = q.op;
  std::replace(op.begin(), op.end(), '-', '_');
  if (op == "st") {
    if (q.body.contains("group")) return op_st_mono(sc, q.body, opt, notes);
    return op_st(sc, q.body, opt);
  }
  if (op == "decide_tame") return op_decide_tame(sc, q.body, opt);
  if (op == "check_section") return op_check_section(sc, q.body, opt);
  if (op == "complement") return op_complement(sc, q.body, opt);
  if (op == "equivalence") return op_equivalence(sc, q.body, opt);
  if (op == "st_mono") return op_st_mono(sc, q.body, opt, notes);
  if (op == "valuation") return op_valuation(sc, q.body, opt, notes);
  if (op == "induced_valuation") {
    return op_induced_valuation(sc, q.body, opt, notes);
  }
  if (op == "residue") return op_residue(sc, q.body, opt, notes);
  if (op == "proptest") return op_proptest(sc, q.body, opt);
  fail(ErrorCode::schema_error, "unknown op '" + q.op + "'");
}

}  // namespace

Scenario load_scenario(const std::string& text, const std::string& name) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The library message reads "[json.exception...] parse error at line L,
    // column C: ..."; keep the position and reason, drop the class prefix.
    std::string msg = e.what();
    if (size_t close = msg.find("] "); close != std::string::npos) {
      msg = msg.substr(close + 2);
    }
    const std::string at = "parse error at ";
    if (msg.rfind(at, 0) == 0) msg = msg.substr(at.size());
    fail(ErrorCode::parse_error, msg);
  }
  if (!doc.is_object()) {
    fail(ErrorCode::schema_error, "scenario root must be an object");
  }
  const std::string schema = need_string(doc, "schema", "scenario");
  if (schema != kScenarioSchema) {
    fail(ErrorCode::schema_error, "unsupported schema '" + schema +
                                      "'; expected " + kScenarioSchema);
  }

  Scenario sc;
  sc.name = name;

  const OrderedJson& f = need(doc, "field", "scenario");
  const std::string fkind = need_string(f, "kind", "field");
  if (fkind == "rationals") {
    sc.field = Field::rationals();
  } else if (fkind == "quadratic") {
    sc.field = Field::quadratic(
        static_cast<unsigned long>(need_int(f, "d", "field")));
  } else {
    fail(ErrorCode::schema_error, "unknown field kind '" + fkind + "'");
  }

  if (doc.contains("ambients")) {
    for (const auto& [nm, spec] : doc.at("ambients").items()) {
      const std::string where = "ambient '" + nm + "'";
      const std::string kind = need_string(spec, "kind", where);
      if (kind == "lex") {
        sc.ambients.emplace(nm, GroupCtx::lex(static_cast<int>(need_int(
                                                  spec, "dim", where)),
                                              sc.field));
      } else if (kind == "hahn") {
        sc.ambients.emplace(nm, GroupCtx::hahn(sc.field));
      } else {
        fail(ErrorCode::schema_error, where + " has unknown kind '" + kind +
                                          "'");
      }
    }
  }

  if (doc.contains("subgroups")) {
    for (const auto& [nm, spec] : doc.at("subgroups").items()) {
      const std::string where = "subgroup '" + nm + "'";
      const GroupCtx& ctx =
          find_ambient(sc, need_string(spec, "ambient", where));
      Ring ring = Ring::q;
      if (spec.contains("ring")) {
        const std::string r = need_string(spec, "ring", where);
        if (r == "q") {
          ring = Ring::q;
        } else if (r == "z") {
          ring = Ring::z;
        } else {
          fail(ErrorCode::schema_error,
               where + " ring must be 'q' or 'z', got '" + r + "'");
        }
      }
      std::vector<GroupElement> gens;
      const OrderedJson& list = need(spec, "generators", where);
      if (!list.is_array()) {
        fail(ErrorCode::schema_error, where + " generators must be an array");
      }
      for (const auto& g : list) {
        if (!g.is_string()) {
          fail(ErrorCode::schema_error,
               where + " generators must be element strings");
        }
        gens.push_back(parse_element(ctx, g.get<std::string>()));
      }
      sc.subgroups.emplace(nm, Subgroup(ctx, std::move(gens), ring));
    }
  }

  if (doc.contains("morphisms")) {
    for (const auto& [nm, spec] : doc.at("morphisms").items()) {
      const std::string where = "morphism '" + nm + "'";
      const GroupCtx& ctx =
          find_ambient(sc, need_string(spec, "domain", where));
      const OrderedJson& list = need(spec, "stages", where);
      if (!list.is_array()) {
        fail(ErrorCode::schema_error, where + " stages must be an array");
      }
      std::vector<MorphismStage> stages;
      for (const auto& s : list) stages.push_back(parse_stage(s, where));
      sc.morphisms.emplace(nm, Morphism::make(ctx, std::move(stages)));
    }
  }

  if (doc.contains("monomial_groups")) {
    for (const auto& [nm, spec] : doc.at("monomial_groups").items()) {
      const std::string where = "monomial group '" + nm + "'";
      const std::string kind = need_string(spec, "kind", where);
      if (kind == "xq") {
        sc.monomial_groups.emplace(nm, MonomialGroup::xq(sc.field));
      } else if (kind == "coeff_xq") {
        sc.monomial_groups.emplace(
            nm, MonomialGroup::coeff_xq(
                    sc.field, parse_rational_field(need(spec, "base", where),
                                                   where + " base")));
      } else {
        fail(ErrorCode::schema_error, where + " has unknown kind '" + kind +
                                          "'");
      }
    }
  }

  if (doc.contains("queries")) {
    const OrderedJson& list = doc.at("queries");
    if (!list.is_array()) {
      fail(ErrorCode::schema_error, "queries must be an array");
    }
    for (const auto& q : list) {
      Query query;
      query.op = need_string(q, "op", "query");
      query.body = q;
      sc.queries.push_back(std::move(query));
    }
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (size_t slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  if (size_t dot = name.find_last_of('.'); dot != std::string::npos) {
    name = name.substr(0, dot);
  }
  return load_scenario(buf.str(), name);
}

ScenarioResult run_scenario(const Scenario& sc, const RunOptions& opt) {
  ScenarioResult res;
  OrderedJson rep;
  rep["schema"] = kReportSchema;
  rep["scenario"] = sc.name;
  rep["field"] = sc.field.to_string();
  rep["seed"] = std::to_string(opt.seed);
  rep["default_cases"] = std::to_string(opt.cases);

  std::vector<std::string> notes;
  OrderedJson entries = OrderedJson::array();
  std::string text = "ogtame report -- scenario " + sc.name + "\n";
  text += "field " + sc.field.to_string() + ", seed " +
          std::to_string(opt.seed) + ", default cases " +
          std::to_string(opt.cases) + "\n";

  bool all = true;
  size_t index = 0;
  for (const Query& q : sc.queries) {
    ++index;
    Outcome out;
    try {
      out = run_query(sc, q, opt, notes);
    } catch (const Error& e) {
      throw Error(e.code(), "query #" + std::to_string(index) + " (" + q.op +
                                "): " + e.what());
    }
    out.entry["index"] = std::to_string(index);
    entries.push_back(out.entry);
    text += "#" + std::to_string(index) + " " + out.text;
    if (!out.pass) {
      all = false;
      if (opt.fail_fast) break;
    }
  }

  rep["notes"] = notes;
  rep["queries"] = entries;
  rep["all_pass"] = all;
  for (const std::string& n : notes) text += "note: " + n + "\n";
  text += std::string("result: ") + (all ? "PASS" : "FAIL") + " (" +
          std::to_string(entries.size()) + " of " +
          std::to_string(sc.queries.size()) + " queries run)\n";

  res.machine = std::move(rep);
  res.text = std::move(text);
  res.all_pass = all;
  return res;
}

ScenarioResult run_single_query(const Scenario& sc, const Query& q,
                                const RunOptions& opt) {
  Scenario one = sc;
  one.queries.clear();
  one.queries.push_back(q);
  return run_scenario(one, opt);
}

}  // namespace ogtame
