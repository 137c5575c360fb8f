// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "morphism.hpp"
#include "subgroup.hpp"

using namespace ogtame;

namespace {

const Field kQ = Field::rationals();
const Field kQ2 = Field::quadratic(2);
const GroupCtx kLexQ3 = GroupCtx::lex(3, kQ);
const GroupCtx kLexQ22 = GroupCtx::lex(2, kQ2);
const GroupCtx kHahnQ = GroupCtx::hahn(kQ);

GroupElement el(const GroupCtx& ctx, const char* text) {
  return parse_element(ctx, text);
}

Subgroup span_q(const GroupCtx& ctx, std::initializer_list<const char*> gens) {
  std::vector<GroupElement> v;
  for (const char* g : gens) v.push_back(el(ctx, g));
  return Subgroup(ctx, std::move(v), Ring::q);
}

RatMatrix rows(std::initializer_list<std::initializer_list<long>> data) {
  RatMatrix m;
  for (const auto& r : data) {
    std::vector<Rational> row;
    for (long v : r) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("subgroup echelon basis and membership over Q") {
  const Subgroup s = span_q(kLexQ3, {"(1, 0, 1)", "(0, 2, 0)", "(1, 2, 1)"});
  CHECK(s.dim() == 2);  // third generator is dependent
  CHECK(s.contains(el(kLexQ3, "(1/2, 0, 1/2)")));
  CHECK(s.contains(el(kLexQ3, "(1, -3, 1)")));
  CHECK(s.contains(el(kLexQ3, "(0, 0, 0)")));
  CHECK(!s.contains(el(kLexQ3, "(1, 0, 0)")));
  CHECK(!s.contains(el(kLexQ3, "(0, 0, 1)")));
  const auto c = s.coords(el(kLexQ3, "(2, 5, 2)"));
  REQUIRE(c.has_value());
  CHECK(g_eq(s.from_coords(*c), el(kLexQ3, "(2, 5, 2)")));
}

TEST_CASE("z-span membership demands integral coordinates") {
  std::vector<GroupElement> gens = {el(kLexQ3, "(2, 0, 0)"),
                                    el(kLexQ3, "(1, 1, 0)")};
  const Subgroup lattice(kLexQ3, std::move(gens), Ring::z);
  CHECK(lattice.contains(el(kLexQ3, "(3, 1, 0)")));    // (2,0,0) + (1,1,0)
  CHECK(lattice.contains(el(kLexQ3, "(1, -1, 0)")));   // (2,0,0) - (1,1,0)
  CHECK(lattice.contains(el(kLexQ3, "(0, 2, 0)")));    // 2(1,1,0) - (2,0,0)
  CHECK(!lattice.contains(el(kLexQ3, "(1, 0, 0)")));   // needs half of a gen
  CHECK(!lattice.contains(el(kLexQ3, "(0, 1, 0)")));
  CHECK(!lattice.contains(el(kLexQ3, "(1/2, 1/2, 0)")));
}

TEST_CASE("quadratic coordinates split into rational slots") {
  const Subgroup s = span_q(kLexQ22, {"(1, 0)", "(sqrt(2), 0)"});
  CHECK(s.dim() == 2);
  CHECK(s.contains(el(kLexQ22, "(3/2-2*sqrt(2), 0)")));
  CHECK(!s.contains(el(kLexQ22, "(1, 1)")));
  const Subgroup line = span_q(kLexQ22, {"(1+1*sqrt(2), 0)"});
  CHECK(line.dim() == 1);
  CHECK(line.contains(el(kLexQ22, "(1/2+1/2*sqrt(2), 0)")));
  CHECK(!line.contains(el(kLexQ22, "(1, 0)")));
  CHECK(!line.contains(el(kLexQ22, "(1-1*sqrt(2), 0)")));
}

TEST_CASE("trivial subgroup and level accessors") {
  const Subgroup t = Subgroup::trivial(kLexQ3);
  CHECK(t.is_trivial());
  CHECK(t.dim() == 0);
  CHECK(t.contains(GroupElement::zero(kLexQ3)));
  CHECK(!t.contains(el(kLexQ3, "(1, 0, 0)")));
  CHECK_THROWS_AS(t.top_level(), Error);
  const Subgroup s = span_q(kLexQ3, {"(0, 1, 0)", "(0, 0, 3)"});
  CHECK(level_eq(s.top_level(), lead(el(kLexQ3, "(0, 1, 0)"))));
  CHECK(level_eq(s.least_pivot_level(), lead(el(kLexQ3, "(0, 0, 1)"))));
}

TEST_CASE("hahn subgroups span finitely many exponents") {
  const Subgroup s = span_q(kHahnQ, {"x^1 + x^0", "x^0 - x^-2"});
  CHECK(s.dim() == 2);
  CHECK(s.contains(el(kHahnQ, "2*x^1 + 3*x^0 - 1*x^-2")));
  CHECK(!s.contains(el(kHahnQ, "x^1")));
  CHECK(!s.contains(el(kHahnQ, "x^3")));
}

TEST_CASE("projection morphisms: apply, kernel, target") {
  const Morphism f =
      Morphism::make(kLexQ3, {MorphismStage::projection(2)});
  CHECK(f.is_lex());
  CHECK(f.target().dim == 2);
  CHECK(g_eq(f.apply(el(kLexQ3, "(1, 2, 3)")),
             el(f.target(), "(1, 2)")));
  CHECK(f.kernel().member(el(kLexQ3, "(0, 0, 5)")));
  CHECK(!f.kernel().member(el(kLexQ3, "(0, 1, 0)")));
  CHECK(f.kernel().dim() == 1);
  CHECK_THROWS_AS(Morphism::make(kLexQ3, {MorphismStage::projection(0)}),
                  Error);
  CHECK_THROWS_AS(Morphism::make(kLexQ3, {MorphismStage::projection(4)}),
                  Error);
}

TEST_CASE("shear stages must be order-preserving") {
  // Lower-triangular with positive diagonal: preserves lex order.
  const RatMatrix good = rows({{1, 0, 0}, {5, 2, 0}, {-7, 3, 1}});
  CHECK(is_order_preserving(kLexQ3, kLexQ3, good).preserving);
  const Morphism g = Morphism::make(kLexQ3, {MorphismStage::make_shear(good),
                                             MorphismStage::projection(1)});
  CHECK(g_eq(g.apply(el(kLexQ3, "(1, 1, 1)")), el(g.target(), "(1)")));

  // Negative diagonal entry flips the order somewhere: rejected.
  const RatMatrix flip = rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  const OrderCheck bad = is_order_preserving(kLexQ3, kLexQ3, flip);
  CHECK(!bad.preserving);
  REQUIRE(bad.witness.has_value());
  CHECK(g_sign(*bad.witness) > 0);
  // Re-verify the witness by applying the raw slot matrix.
  const Window w = Window::full(kLexQ3);
  const auto wc = w.coords(*bad.witness);
  REQUIRE(wc.has_value());
  CHECK(g_sign(w.element(mat_vec(flip, *wc))) < 0);
  CHECK_THROWS_AS(Morphism::make(kLexQ3, {MorphismStage::make_shear(flip)}),
                  Error);

  // An upper-triangular coupling leaks a less significant coordinate into
  // a more significant one: rejected with a witness.
  const RatMatrix leak = rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(!is_order_preserving(kLexQ3, kLexQ3, leak).preserving);
}

TEST_CASE("quadratic shears allow multiplication by positive units") {
  // Multiplication by 1 + sqrt(2) on the first coordinate: the slot block
  // [[1, 2], [1, 1]] with determinant -1 is an order-automorphism of
  // Q(sqrt(2)) because 1 + sqrt(2) > 0.
  const RatMatrix unit = rows({{1, 2, 0, 0}, {1, 1, 0, 0},
                               {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(is_order_preserving(kLexQ22, kLexQ22, unit).preserving);
  // Multiplication by 1 - sqrt(2) < 0 reverses the order: rejected.
  const RatMatrix neg = rows({{1, -2, 0, 0}, {-1, 1, 0, 0},
                              {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(!is_order_preserving(kLexQ22, kLexQ22, neg).preserving);
}

TEST_CASE("hahn truncation morphisms") {
  const Morphism t =
      Morphism::make(kHahnQ, {MorphismStage::hahn_truncate(Rational(0))});
  CHECK(!t.is_lex());
  CHECK(g_eq(t.apply(el(kHahnQ, "x^1 + x^0 + x^-1")),
             el(kHahnQ, "x^1 + x^0")));
  CHECK(t.kernel().member(el(kHahnQ, "5*x^-1 + x^-3")));
  CHECK(!t.kernel().member(el(kHahnQ, "x^0 + x^-1")));
  CHECK(t.cut() == Rational(0));
}

TEST_CASE("composed stages multiply out") {
  const RatMatrix shear = rows({{2, 0, 0}, {1, 1, 0}, {0, 0, 1}});
  const Morphism f = Morphism::make(
      kLexQ3, {MorphismStage::make_shear(shear), MorphismStage::projection(2)});
  CHECK(f.target().dim == 2);
  // (1, 0, 4) -> shear (2, 1, 4) -> project (2, 1).
  CHECK(g_eq(f.apply(el(kLexQ3, "(1, 0, 4)")), el(f.target(), "(2, 1)")));
  // Kernel: shear then drop of the last coordinate.
  CHECK(f.kernel().member(el(kLexQ3, "(0, 0, 9)")));
  CHECK(f.kernel().dim() == 1);
}

TEST_CASE("section subgroups are cross-section images by construction") {
  const Morphism f = Morphism::make(kLexQ3, {MorphismStage::projection(1)});
  // T maps the single target slot into the two kernel slots.
  RatMatrix t = rows({{1}, {-2}});
  const Subgroup s = section_subgroup(f, t);
  CHECK(s.dim() == 1);
  CHECK(s.contains(el(kLexQ3, "(1, 1, -2)")));
  // f restricted to s inverts: f(s(delta)) = delta.
  for (const GroupElement& g : s.basis()) {
    CHECK(g_eq(f.apply(g), el(f.target(), "(1)")));
  }
  CHECK_THROWS_AS(section_subgroup(f, rows({{1}})), Error);  // wrong shape
}

TEST_CASE("complement of kernel meets it trivially and spans jointly") {
  for (int keep = 1; keep <= 2; ++keep) {
    const Morphism f =
        Morphism::make(kLexQ3, {MorphismStage::projection(keep)});
    const Subgroup c = complement_of_kernel(f);
    CHECK(c.dim() == keep);
    for (const GroupElement& g : c.basis()) {
      CHECK((g_eq(g, GroupElement::zero(kLexQ3)) || !f.kernel().member(g)));
    }
  }
  const Morphism h =
      Morphism::make(kHahnQ, {MorphismStage::hahn_truncate(Rational(0))});
  CHECK_THROWS_AS(complement_of_kernel(h), Error);
}
