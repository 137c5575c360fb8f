// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "element.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <utility>

#include "errors.hpp"

namespace ogtame {

GroupCtx GroupCtx::lex(int n, Field f) {
  if (n < 1) fail(ErrorCode::schema_error, "lex rank must be at least 1");
  GroupCtx ctx;
  ctx.kind = Kind::lex;
  ctx.dim = n;
  ctx.field = f;
  return ctx;
}

GroupCtx GroupCtx::hahn(Field f) {
  GroupCtx ctx;
  ctx.kind = Kind::hahn;
  ctx.dim = 0;
  ctx.field = f;
  return ctx;
}

std::string GroupCtx::to_string() const {
  if (kind == Kind::lex) {
    return "lex(" + std::to_string(dim) + ", " + field.to_string() + ")";
  }
  return "hahn(" + field.to_string() + ")";
}

bool is_canonical(const TermList& terms) {
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff.is_zero()) return false;
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) return false;
  }
  return true;
}

TermList normalize_terms(TermList terms) {
  std::map<Rational, Scalar, std::greater<Rational>> acc;
  for (auto& t : terms) {
    auto it = acc.find(t.exponent);
    if (it == acc.end()) {
      acc.emplace(t.exponent, t.coeff);
    } else {
      it->second = s_add(it->second, t.coeff);
    }
  }
  TermList out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.push_back({e, c});
  }
  assert(is_canonical(out));
  return out;
}

Level Level::lex_at(int index) {
  Level l;
  l.kind = GroupCtx::Kind::lex;
  l.index = index;
  return l;
}

Level Level::hahn_at(Rational exponent) {
  Level l;
  l.kind = GroupCtx::Kind::hahn;
  l.exponent = std::move(exponent);
  return l;
}

std::string Level::to_string() const {
  if (kind == GroupCtx::Kind::lex) {
    return "coordinate " + std::to_string(index);
  }
  return "exponent " + exponent.to_string();
}

bool level_eq(const Level& x, const Level& y) {
  if (x.kind != y.kind) {
    fail(ErrorCode::context_mismatch, "levels from different group kinds");
  }
  if (x.kind == GroupCtx::Kind::lex) return x.index == y.index;
  return x.exponent == y.exponent;
}

bool more_significant(const Level& x, const Level& y) {
  if (x.kind != y.kind) {
    fail(ErrorCode::context_mismatch, "levels from different group kinds");
  }
  if (x.kind == GroupCtx::Kind::lex) return x.index < y.index;
  return x.exponent > y.exponent;
}

GroupElement GroupElement::zero(const GroupCtx& ctx) {
  GroupElement g(ctx);
  if (ctx.kind == GroupCtx::Kind::lex) {
    g.coords_.assign(ctx.dim, Scalar(Rational(0), Rational(0), ctx.field.d()));
  }
  return g;
}

GroupElement GroupElement::lex(const GroupCtx& ctx,
                               std::vector<Scalar> coords) {
  if (ctx.kind != GroupCtx::Kind::lex) {
    fail(ErrorCode::context_mismatch, "lex coordinates for a hahn group");
  }
  if (static_cast<int>(coords.size()) != ctx.dim) {
    fail(ErrorCode::dimension_mismatch,
         "expected " + std::to_string(ctx.dim) + " coordinates, got " +
             std::to_string(coords.size()));
  }
  GroupElement g(ctx);
  g.coords_.reserve(coords.size());
  for (auto& c : coords) g.coords_.push_back(in_field(ctx.field, c));
  return g;
}

GroupElement GroupElement::hahn(const GroupCtx& ctx, TermList terms) {
  if (ctx.kind != GroupCtx::Kind::hahn) {
    fail(ErrorCode::context_mismatch, "hahn terms for a lex group");
  }
  GroupElement g(ctx);
  TermList widened;
  widened.reserve(terms.size());
  for (auto& t : terms) {
    widened.push_back({t.exponent, in_field(ctx.field, t.coeff)});
  }
  g.terms_ = normalize_terms(std::move(widened));
  return g;
}

const std::vector<Scalar>& GroupElement::coords() const {
  if (ctx_.kind != GroupCtx::Kind::lex) {
    fail(ErrorCode::context_mismatch, "coords() on a hahn element");
  }
  return coords_;
}

const TermList& GroupElement::terms() const {
  if (ctx_.kind != GroupCtx::Kind::hahn) {
    fail(ErrorCode::context_mismatch, "terms() on a lex element");
  }
  return terms_;
}

bool GroupElement::is_zero() const {
  if (ctx_.kind == GroupCtx::Kind::lex) {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Scalar& c) { return c.is_zero(); });
  }
  return terms_.empty();
}

namespace {

void require_same_ctx(const GroupElement& x, const GroupElement& y) {
  if (x.ctx() != y.ctx()) {
    fail(ErrorCode::context_mismatch,
         "elements of " + x.ctx().to_string() + " and " +
             y.ctx().to_string());
  }
}

}  // namespace

GroupElement g_add(const GroupElement& x, const GroupElement& y) {
  require_same_ctx(x, y);
  if (x.ctx().kind == GroupCtx::Kind::lex) {
    std::vector<Scalar> out;
    out.reserve(x.coords().size());
    for (size_t i = 0; i < x.coords().size(); ++i) {
      out.push_back(s_add(x.coords()[i], y.coords()[i]));
    }
    return GroupElement::lex(x.ctx(), std::move(out));
  }
  TermList merged = x.terms();
  merged.insert(merged.end(), y.terms().begin(), y.terms().end());
  return GroupElement::hahn(x.ctx(), std::move(merged));
}

GroupElement g_sub(const GroupElement& x, const GroupElement& y) {
  return g_add(x, g_neg(y));
}

GroupElement g_neg(const GroupElement& x) {
  if (x.ctx().kind == GroupCtx::Kind::lex) {
    std::vector<Scalar> out;
    out.reserve(x.coords().size());
    for (auto& c : x.coords()) out.push_back(s_neg(c));
    return GroupElement::lex(x.ctx(), std::move(out));
  }
  TermList out = x.terms();
  for (auto& t : out) t.coeff = s_neg(t.coeff);
  return GroupElement::hahn(x.ctx(), std::move(out));
}

GroupElement g_scale(const Rational& q, const GroupElement& x) {
  if (x.ctx().kind == GroupCtx::Kind::lex) {
    std::vector<Scalar> out;
    out.reserve(x.coords().size());
    for (auto& c : x.coords()) out.push_back(s_scale(q, c));
    return GroupElement::lex(x.ctx(), std::move(out));
  }
  TermList out = x.terms();
  for (auto& t : out) t.coeff = s_scale(q, t.coeff);
  return GroupElement::hahn(x.ctx(), std::move(out));
}

GroupElement g_abs(const GroupElement& x) {
  return g_sign(x) < 0 ? g_neg(x) : x;
}

int g_cmp(const GroupElement& x, const GroupElement& y) {
  require_same_ctx(x, y);
  if (x.ctx().kind == GroupCtx::Kind::lex) {
    for (size_t i = 0; i < x.coords().size(); ++i) {
      int c = s_cmp(x.coords()[i], y.coords()[i]);
      if (c != 0) return c;
    }
    return 0;
  }
  // Walk both canonical term lists; the most significant difference
  // decides.
  const TermList& a = x.terms();
  const TermList& b = y.terms();
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent > b[j].exponent)) {
      return s_sign(a[i].coeff);
    }
    if (i == a.size() || b[j].exponent > a[i].exponent) {
      return -s_sign(b[j].coeff);
    }
    int c = s_cmp(a[i].coeff, b[j].coeff);
    if (c != 0) return c;
    ++i;
    ++j;
  }
  return 0;
}

Level lead(const GroupElement& x) {
  if (x.ctx().kind == GroupCtx::Kind::lex) {
    for (size_t i = 0; i < x.coords().size(); ++i) {
      if (!x.coords()[i].is_zero()) {
        return Level::lex_at(static_cast<int>(i) + 1);
      }
    }
    fail(ErrorCode::zero_element, "lead of the zero element");
  }
  if (x.terms().empty()) {
    fail(ErrorCode::zero_element, "lead of the zero element");
  }
  return Level::hahn_at(x.terms().front().exponent);
}

Scalar lead_coeff(const GroupElement& x) {
  if (x.ctx().kind == GroupCtx::Kind::lex) {
    for (auto& c : x.coords()) {
      if (!c.is_zero()) return c;
    }
    fail(ErrorCode::zero_element, "lead coefficient of the zero element");
  }
  if (x.terms().empty()) {
    fail(ErrorCode::zero_element, "lead coefficient of the zero element");
  }
  return x.terms().front().coeff;
}

std::string format_exponent(const Rational& e) {
  if (e.is_integer()) return e.to_string();
  return "(" + e.to_string() + ")";
}

namespace {

std::string hahn_term_string(const Scalar& magnitude, const Rational& e) {
  std::string cs = format_scalar(magnitude);
  bool needs_parens =
      cs.find_first_of("+-", 1) != std::string::npos || cs.front() == '-';
  if (needs_parens) cs = "(" + cs + ")";
  return cs + "*x^" + format_exponent(e);
}

std::string_view strip_spaces(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return std::string_view();
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string_view strip_outer_parens(std::string_view s) {
  s = strip_spaces(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    s = strip_spaces(s.substr(1, s.size() - 2));
  }
  return s;
}

// Splits at top-level '+'/'-' term separators. A sign counts as a
// separator only outside parentheses and right after a digit, ')', or
// 'x', so exponent signs and coefficient-internal signs stay attached.
std::vector<std::pair<int, std::string_view>> split_signed_terms(
    std::string_view body) {
  std::vector<std::pair<int, std::string_view>> pieces;
  int sign = 1;
  size_t start = 0;
  int depth = 0;
  char prev = '\0';
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == '+' || c == '-') && depth == 0 && i > 0 &&
        (std::isdigit(static_cast<unsigned char>(prev)) || prev == ')' ||
         prev == 'x')) {
      pieces.emplace_back(sign, body.substr(start, i - start));
      sign = c == '-' ? -1 : 1;
      start = i + 1;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  pieces.emplace_back(sign, body.substr(start));
  return pieces;
}

SeriesTerm parse_hahn_term(const GroupCtx& ctx, std::string_view piece,
                           std::string_view whole) {
  piece = strip_spaces(piece);
  if (piece.empty()) {
    fail(ErrorCode::parse_error, "empty term in '" + std::string(whole) + "'");
  }
  // Find the monomial 'x' at depth 0; 'x' never occurs inside sqrt(...)
  // or a parenthesized coefficient.
  size_t xpos = std::string_view::npos;
  int depth = 0;
  for (size_t i = 0; i < piece.size(); ++i) {
    if (piece[i] == '(') ++depth;
    if (piece[i] == ')') --depth;
    if (piece[i] == 'x' && depth == 0) {
      xpos = i;
      break;
    }
  }
  Scalar coeff(Rational(1), Rational(0), ctx.field.d());
  Rational exponent(0);
  if (xpos == std::string_view::npos) {
    coeff = parse_scalar(ctx.field, strip_outer_parens(piece));
    return {exponent, coeff};
  }
  std::string_view head = strip_spaces(piece.substr(0, xpos));
  if (!head.empty()) {
    if (head == "-") {
      coeff = Scalar(Rational(-1), Rational(0), ctx.field.d());
    } else {
      if (head.back() == '*') head = head.substr(0, head.size() - 1);
      coeff = parse_scalar(ctx.field, strip_outer_parens(head));
    }
  }
  std::string_view tail = strip_spaces(piece.substr(xpos + 1));
  if (!tail.empty()) {
    if (tail.front() != '^') {
      fail(ErrorCode::parse_error,
           "expected '^' after x in '" + std::string(whole) + "'");
    }
    exponent = Rational::parse(strip_outer_parens(tail.substr(1)));
  } else {
    exponent = Rational(1);
  }
  return {exponent, coeff};
}

}  // namespace

std::string format_element(const GroupElement& x) {
  if (x.ctx().kind == GroupCtx::Kind::lex) {
    std::string out = "(";
    for (size_t i = 0; i < x.coords().size(); ++i) {
      if (i > 0) out += ", ";
      out += format_scalar(x.coords()[i]);
    }
    return out + ")";
  }
  if (x.terms().empty()) return "0";
  std::string out;
  for (size_t i = 0; i < x.terms().size(); ++i) {
    const SeriesTerm& t = x.terms()[i];
    bool neg = s_sign(t.coeff) < 0;
    Scalar mag = neg ? s_neg(t.coeff) : t.coeff;
    std::string ts = hahn_term_string(mag, t.exponent);
    if (i == 0) {
      out = (neg ? "-" : "") + ts;
    } else {
      out += (neg ? " - " : " + ") + ts;
    }
  }
  return out;
}

GroupElement parse_element(const GroupCtx& ctx, std::string_view text) {
  std::string_view body = strip_spaces(text);
  if (body.empty()) {
    fail(ErrorCode::parse_error, "empty element literal");
  }
  if (ctx.kind == GroupCtx::Kind::lex) {
    if (body.front() != '(' || body.back() != ')') {
      fail(ErrorCode::parse_error,
           "lex element must be parenthesized: '" + std::string(text) + "'");
    }
    std::string_view inner = body.substr(1, body.size() - 2);
    std::vector<Scalar> coords;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i <= inner.size(); ++i) {
      if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
        coords.push_back(
            parse_scalar(ctx.field, inner.substr(start, i - start)));
        start = i + 1;
        continue;
      }
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
    }
    if (static_cast<int>(coords.size()) != ctx.dim) {
      fail(ErrorCode::dimension_mismatch,
           "expected " + std::to_string(ctx.dim) + " coordinates in '" +
               std::string(text) + "'");
    }
    return GroupElement::lex(ctx, std::move(coords));
  }
  if (body == "0") return GroupElement::zero(ctx);
  TermList terms;
  for (auto& [sign, piece] : split_signed_terms(body)) {
    SeriesTerm t = parse_hahn_term(ctx, piece, text);
    if (sign < 0) t.coeff = s_neg(t.coeff);
    terms.push_back(std::move(t));
  }
  return GroupElement::hahn(ctx, std::move(terms));
}

}  // namespace ogtame
