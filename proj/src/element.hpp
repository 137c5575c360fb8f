// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_ELEMENT_HPP
#define OGTAME_ELEMENT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "scalar.hpp"

namespace ogtame {

// Ambient group shape. Two kinds are supported:
//   lex(n, F):  F^n ordered lexicographically, coordinate 1 most
//               significant;
//   hahn(F):    finitely supported formal sums sum_i c_i * x^{e_i} with
//               c_i in F and rational exponents e_i, ordered by the
//               highest exponent with a nonzero coefficient.
// Both are divisible totally ordered abelian groups under addition.
struct GroupCtx {
  enum class Kind { lex, hahn };

  Kind kind = Kind::lex;
  int dim = 0;  // lex only
  Field field = Field::rationals();

  static GroupCtx lex(int n, Field f);
  static GroupCtx hahn(Field f);

  bool operator==(const GroupCtx& o) const {
    return kind == o.kind && field == o.field &&
           (kind == Kind::hahn || dim == o.dim);
  }
  bool operator!=(const GroupCtx& o) const { return !(*this == o); }

  std::string to_string() const;
};

// One term of a hahn element: coeff * x^exponent with coeff != 0.
struct SeriesTerm {
  Rational exponent;
  Scalar coeff;
};

// Term lists are kept canonical: strictly descending exponents, no zero
// coefficients.
using TermList = std::vector<SeriesTerm>;

bool is_canonical(const TermList& terms);
TermList normalize_terms(TermList terms);

// Archimedean level of a nonzero element: a lex coordinate position
// (1-based, 1 most significant) or a hahn exponent (larger means more
// significant).
struct Level {
  GroupCtx::Kind kind = GroupCtx::Kind::lex;
  int index = 0;
  Rational exponent;

  static Level lex_at(int index);
  static Level hahn_at(Rational exponent);

  std::string to_string() const;
};

bool level_eq(const Level& x, const Level& y);
bool more_significant(const Level& x, const Level& y);

// Immutable element of a lex or hahn ambient group.
class GroupElement {
 public:
  static GroupElement zero(const GroupCtx& ctx);
  static GroupElement lex(const GroupCtx& ctx, std::vector<Scalar> coords);
  static GroupElement hahn(const GroupCtx& ctx, TermList terms);

  const GroupCtx& ctx() const { return ctx_; }
  const std::vector<Scalar>& coords() const;
  const TermList& terms() const;
  bool is_zero() const;

 private:
  explicit GroupElement(GroupCtx ctx) : ctx_(std::move(ctx)) {}
  GroupCtx ctx_;
  std::vector<Scalar> coords_;  // lex
  TermList terms_;              // hahn
};

GroupElement g_add(const GroupElement& x, const GroupElement& y);
GroupElement g_sub(const GroupElement& x, const GroupElement& y);
GroupElement g_neg(const GroupElement& x);
GroupElement g_scale(const Rational& q, const GroupElement& x);
GroupElement g_abs(const GroupElement& x);

// Three-way comparison in the group order (-1, 0, or 1).
int g_cmp(const GroupElement& x, const GroupElement& y);
inline int g_sign(const GroupElement& x) {
  return g_cmp(x, GroupElement::zero(x.ctx()));
}
inline bool g_eq(const GroupElement& x, const GroupElement& y) {
  return g_cmp(x, y) == 0;
}

// Level of the most significant nonzero coordinate or term; rejects the
// zero element.
Level lead(const GroupElement& x);
// Scalar sitting at the lead level.
Scalar lead_coeff(const GroupElement& x);

std::string format_element(const GroupElement& x);
GroupElement parse_element(const GroupCtx& ctx, std::string_view text);

std::string format_exponent(const Rational& e);

}  // namespace ogtame

#endif  // OGTAME_ELEMENT_HPP
