// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "generate.hpp"
#include "rng.hpp"
#include "tame.hpp"

using namespace ogtame;

namespace {

const Field kQ = Field::rationals();
const Field kQ2 = Field::quadratic(2);
const GroupCtx kLexQ3 = GroupCtx::lex(3, kQ);
const GroupCtx kLexQ22 = GroupCtx::lex(2, kQ2);
const GroupCtx kLexQ21 = GroupCtx::lex(1, kQ2);
const GroupCtx kHahnQ = GroupCtx::hahn(kQ);

GroupElement el(const GroupCtx& ctx, const char* text) {
  return parse_element(ctx, text);
}

Subgroup span_q(const GroupCtx& ctx, std::initializer_list<const char*> gens) {
  std::vector<GroupElement> v;
  for (const char* g : gens) v.push_back(el(ctx, g));
  return Subgroup(ctx, std::move(v), Ring::q);
}

// Independent nearest-element oracle by midpoint refinement: starting from
// each basis direction, halve the step at least `rounds` times and verify
// that no probed member of S lands strictly between `near` and `b`. Uses
// only group arithmetic and comparisons, not the coordinate solver.
void confirm_nearest(const Subgroup& s, const GroupElement& b,
                     const GroupElement& near, int rounds = 24) {
  const int side = g_cmp(b, near);  // 0 exact, else the open side probed
  for (const GroupElement& g : s.basis()) {
    for (int dir = -1; dir <= 1; dir += 2) {
      Rational step(dir, 2);
      for (int k = 0; k < rounds; ++k) {
        const GroupElement cand = g_add(near, g_scale(step, g));
        const int lo = g_cmp(cand, near);
        const int hi = g_cmp(cand, b);
        // Strictly between near and b would refute nearestness; equal to
        // b would refute the strict case classification.
        CHECK(!(lo * side > 0 && hi * side < 0));
        if (side != 0) CHECK(hi != 0);
        step = step / Rational(2);
      }
    }
  }
}

}  // namespace

TEST_CASE("standard part: exact, below, above, unbounded") {
  const Subgroup s = span_q(kLexQ3, {"(1, 0, 1/2)", "(0, 1, -1)"});

  const StResult exact = standard_part(s, el(kLexQ3, "(2, 3, -2)"));
  CHECK(exact.kind == StCase::exact);
  REQUIRE(exact.value.has_value());
  CHECK(g_eq(*exact.value, el(kLexQ3, "(2, 3, -2)")));

  // (1, 1, 0) differs from the unique matching member (1, 1, -1/2) only
  // at the infinitesimal level; the residual sign picks the side.
  const StResult below = standard_part(s, el(kLexQ3, "(1, 1, 0)"));
  CHECK(below.kind == StCase::nearest_below);
  REQUIRE(below.value.has_value());
  CHECK(g_eq(*below.value, el(kLexQ3, "(1, 1, -1/2)")));
  confirm_nearest(s, el(kLexQ3, "(1, 1, 0)"), *below.value);

  const StResult above = standard_part(s, el(kLexQ3, "(1, 1, -1)"));
  CHECK(above.kind == StCase::nearest_above);
  REQUIRE(above.value.has_value());
  CHECK(g_eq(*above.value, el(kLexQ3, "(1, 1, -1/2)")));
  confirm_nearest(s, el(kLexQ3, "(1, 1, -1)"), *above.value);

  // The 2-generator span bounds nothing reaching level 1 beyond its own
  // top level multiples; an element of an untouched higher level is
  // unbounded only when S has no level-1 pivot.
  const Subgroup low = span_q(kLexQ3, {"(0, 1, 0)"});
  const StResult unb = standard_part(low, el(kLexQ3, "(1, 0, 0)"));
  CHECK(unb.kind == StCase::not_bounded);
  CHECK(!unb.value.has_value());
}

TEST_CASE("standard part oracle sweep over seeded tame pairs") {
  const Subgroup s = span_q(kLexQ3, {"(1, 0, 1/2)", "(0, 1, -1)"});
  const GenConfig cfg{0x5eedULL, 6};
  int nontrivial = 0;
  for (int i = 0; i < 40; ++i) {
    const GroupElement b =
        gen_element_bounded(s, cfg, static_cast<uint64_t>(i));
    const StResult r = standard_part(s, b);
    REQUIRE(r.kind != StCase::no_nearest);
    REQUIRE(r.kind != StCase::not_bounded);
    REQUIRE(r.value.has_value());
    CHECK(s.contains(*r.value));
    const int side = g_cmp(b, *r.value);
    if (r.kind == StCase::exact) CHECK(side == 0);
    if (r.kind == StCase::nearest_below) CHECK(side > 0);
    if (r.kind == StCase::nearest_above) CHECK(side < 0);
    if (side != 0) ++nontrivial;
    confirm_nearest(s, b, *r.value, 20);
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("no nearest element: rationals inside a quadratic line") {
  const Subgroup r = span_q(kLexQ21, {"(1)"});
  const StResult st = standard_part(r, el(kLexQ21, "(sqrt(2))"));
  CHECK(st.kind == StCase::no_nearest);
  REQUIRE(st.residual.has_value());
  REQUIRE(st.certificate.has_value());
  // The certificate is a positive member of S weakly below the residual,
  // refuting "nothing of S fits under the residual" for every candidate.
  CHECK(r.contains(*st.certificate));
  CHECK(g_sign(*st.certificate) > 0);
  CHECK(g_cmp(*st.certificate, g_abs(*st.residual)) <= 0);
}

TEST_CASE("positive_below certifies residuals") {
  const Subgroup s = span_q(kLexQ3, {"(1, 0, 0)", "(0, 1, 0)"});
  const GroupElement r = el(kLexQ3, "(0, -3/2, 7)");
  const GroupElement cert = positive_below(s, r);
  CHECK(s.contains(cert));
  CHECK(g_sign(cert) > 0);
  CHECK(g_cmp(cert, g_abs(r)) <= 0);
  CHECK_THROWS_AS(positive_below(s, GroupElement::zero(kLexQ3)), Error);
  CHECK_THROWS_AS(positive_below(s, el(kLexQ3, "(0, 0, 1)")), Error);
}

TEST_CASE("infinitesimal level membership") {
  const Subgroup s = span_q(kLexQ3, {"(1, 2, 0)", "(0, 1, 0)"});
  const InfinitesimalLevel inf = infinitesimal_level(s);
  CHECK(inf.member(el(kLexQ3, "(0, 0, 5)")));
  CHECK(inf.member(GroupElement::zero(kLexQ3)));
  CHECK(!inf.member(el(kLexQ3, "(0, 1, 0)")));
  CHECK(!inf.member(el(kLexQ3, "(1, 0, 0)")));
}

TEST_CASE("boundedness by top level") {
  const Subgroup s = span_q(kLexQ3, {"(0, 1, 0)"});
  CHECK(is_bounded(s, el(kLexQ3, "(0, 500, -9)")));
  CHECK(is_bounded(s, el(kLexQ3, "(0, 0, 3)")));
  CHECK(!is_bounded(s, el(kLexQ3, "(1/9, 0, 0)")));
  CHECK(is_bounded(s, GroupElement::zero(kLexQ3)));
}

TEST_CASE("sample_bounded stays bounded and hits nonzero values") {
  const Subgroup s = span_q(kLexQ3, {"(0, 1, 0)"});
  Sampler rng(0x77, 1, 5);
  bool nonzero = false;
  for (int i = 0; i < 50; ++i) {
    const GroupElement b = sample_bounded(s, rng);
    CHECK(is_bounded(s, b));
    nonzero = nonzero || !b.is_zero();
  }
  CHECK(nonzero);
  const Subgroup t = Subgroup::trivial(kLexQ3);
  CHECK(sample_bounded(t, rng).is_zero());
}

TEST_CASE("decide_tame: positive and negative verdicts with witnesses") {
  CHECK(decide_tame(span_q(kLexQ3, {"(1, 0, 0)", "(0, 1, 0)"})).tame);
  CHECK(decide_tame(span_q(kLexQ3, {"(1, 5, 1/2)"})).tame);
  CHECK(decide_tame(span_q(kLexQ22, {"(1, 0)", "(sqrt(2), 0)"})).tame);
  CHECK(decide_tame(Subgroup::trivial(kLexQ3)).tame);

  // Q inside Q(sqrt(2)): the witness is a concrete unreachable element.
  const Subgroup r = span_q(kLexQ21, {"(1)"});
  const TameResult not_tame = decide_tame(r);
  CHECK(!not_tame.tame);
  REQUIRE(not_tame.witness.has_value());
  CHECK(g_eq(*not_tame.witness, el(kLexQ21, "(1*sqrt(2))")));
  CHECK(standard_part(r, *not_tame.witness).kind == StCase::no_nearest);

  // A middle-level gap: level 2 is spanned only jointly with level 3.
  const Subgroup gap = span_q(kLexQ3, {"(1, 0, 0)", "(0, 1, 1)"});
  CHECK(decide_tame(gap).tame);  // level 3 is infinitesimal padding
  const Subgroup hole = span_q(kLexQ22, {"(1, 0)", "(sqrt(2), 0)",
                                         "(0, 1)"});
  const TameResult hr = decide_tame(hole);
  CHECK(!hr.tame);
  REQUIRE(hr.witness.has_value());
  CHECK(standard_part(hole, *hr.witness).kind == StCase::no_nearest);

  // Z-spans are rejected outright.
  std::vector<GroupElement> zg = {el(kLexQ3, "(1, 0, 0)")};
  const Subgroup z(kLexQ3, std::move(zg), Ring::z);
  CHECK_THROWS_AS(decide_tame(z), Error);
}

TEST_CASE("decide_tame on hahn subgroups") {
  // One pivot level: tame, deeper support is infinitesimal padding.
  CHECK(decide_tame(span_q(kHahnQ, {"x^1 + x^0"})).tame);
  CHECK(decide_tame(span_q(kHahnQ, {"x^0"})).tame);

  // Two pivot levels leave every strictly intermediate exponent bounded
  // but with no nearest member: not tame, witness in between.
  const TameResult gap = decide_tame(span_q(kHahnQ, {"x^1", "x^0"}));
  CHECK(!gap.tame);
  REQUIRE(gap.witness.has_value());
  CHECK(standard_part(span_q(kHahnQ, {"x^1", "x^0"}), *gap.witness).kind ==
        StCase::no_nearest);

  // Over a quadratic field both slots of one level can be pivoted.
  const GroupCtx hq2 = GroupCtx::hahn(kQ2);
  const Subgroup full_level =
      Subgroup(hq2, {parse_element(hq2, "x^1"), parse_element(hq2, "sqrt(2)*x^1")},
               Ring::q);
  CHECK(decide_tame(full_level).tame);
  const Subgroup half_level = Subgroup(hq2, {parse_element(hq2, "x^1")}, Ring::q);
  CHECK(!decide_tame(half_level).tame);
}

TEST_CASE("check_cross_section accepts graphs and names failures") {
  const Morphism f = Morphism::make(kLexQ3, {MorphismStage::projection(2)});
  const Subgroup graph =
      span_q(kLexQ3, {"(1, 0, 5)", "(0, 1, -1/3)"});
  const SectionCheck good = check_cross_section(f, graph);
  CHECK(good.yes);
  CHECK(good.reason.empty());

  const SectionCheck overlap = check_cross_section(
      f, span_q(kLexQ3, {"(1, 0, 0)", "(0, 1, 0)", "(0, 0, 1)"}));
  CHECK(!overlap.yes);
  CHECK(overlap.reason.find("injectivity") != std::string::npos);

  const SectionCheck thin =
      check_cross_section(f, span_q(kLexQ3, {"(1, 0, 0)"}));
  CHECK(!thin.yes);
  CHECK(thin.reason.find("surjectivity") != std::string::npos);

  std::vector<GroupElement> zg = {el(kLexQ3, "(1, 0, 0)"),
                                  el(kLexQ3, "(0, 1, 0)")};
  const SectionCheck zspan =
      check_cross_section(f, Subgroup(kLexQ3, std::move(zg), Ring::z));
  CHECK(!zspan.yes);
}

TEST_CASE("equivalence report: all three sides agree") {
  const Morphism f = Morphism::make(kLexQ22, {MorphismStage::projection(1)});

  // A graph section: everything passes.
  const Subgroup s = span_q(kLexQ22, {"(1, 1/2)", "(sqrt(2), -1/3)"});
  const EquivalenceReport pos = equivalence_report(f, s, 11, 60);
  CHECK(pos.side_a);
  CHECK(pos.side_bc);
  CHECK(pos.side_bd);
  CHECK(pos.verdict);
  CHECK(pos.all_pass);
  for (const CheckResult* c : pos.checks()) {
    CAPTURE(c->name);
    CHECK((c->pass || !c->evaluated));
  }

  // A kernel-overlapping span: (a) fails and so does each other side.
  const Subgroup bad = span_q(kLexQ22, {"(1, 0)", "(sqrt(2), 0)", "(0, 1)"});
  const EquivalenceReport neg = equivalence_report(f, bad, 11, 60);
  CHECK(!neg.side_a);
  CHECK(!neg.side_bc);
  CHECK(!neg.side_bd);
  CHECK(neg.verdict);  // sides still agree, all negative
  CHECK(!neg.all_pass);

  // Determinism: the same seed reproduces the same witnesses.
  const EquivalenceReport again = equivalence_report(f, bad, 11, 60);
  REQUIRE(again.checks().size() == neg.checks().size());
  for (size_t i = 0; i < again.checks().size(); ++i) {
    CHECK(again.checks()[i]->witnesses == neg.checks()[i]->witnesses);
    CHECK(again.checks()[i]->pass == neg.checks()[i]->pass);
  }
}

TEST_CASE("equivalence report skips sampled checks for z-spans") {
  const Morphism f = Morphism::make(kLexQ3, {MorphismStage::projection(1)});
  std::vector<GroupElement> zg = {el(kLexQ3, "(1, 0, 0)")};
  const Subgroup z(kLexQ3, std::move(zg), Ring::z);
  const EquivalenceReport rep = equivalence_report(f, z, 3, 40);
  CHECK(!rep.b_divisible.pass);
  CHECK(!rep.b_tame.evaluated);
  CHECK(!rep.c_kernel.evaluated);
  CHECK(!rep.all_pass);
  CHECK(rep.verdict);
}
