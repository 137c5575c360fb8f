// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "qcoords.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "errors.hpp"

namespace ogtame {

Window Window::full(const GroupCtx& ctx) {
  if (ctx.kind != GroupCtx::Kind::lex) {
    fail(ErrorCode::context_mismatch,
         "full windows exist for lex groups only");
  }
  return Window(ctx);
}

Window Window::of_exponents(const GroupCtx& ctx,
                            std::vector<Rational> exponents) {
  if (ctx.kind != GroupCtx::Kind::hahn) {
    fail(ErrorCode::context_mismatch, "exponent window for a lex group");
  }
  std::sort(exponents.begin(), exponents.end(),
            [](const Rational& a, const Rational& b) { return a > b; });
  exponents.erase(std::unique(exponents.begin(), exponents.end()),
                  exponents.end());
  Window w(ctx);
  w.exponents_ = std::move(exponents);
  return w;
}

Window Window::for_elements(const GroupCtx& ctx,
                            const std::vector<GroupElement>& elements) {
  if (ctx.kind == GroupCtx::Kind::lex) return full(ctx);
  std::vector<Rational> exps;
  for (auto& g : elements) {
    if (g.ctx() != ctx) {
      fail(ErrorCode::context_mismatch, "window over mixed contexts");
    }
    for (auto& t : g.terms()) exps.push_back(t.exponent);
  }
  return of_exponents(ctx, std::move(exps));
}

int Window::levels() const {
  if (ctx_.kind == GroupCtx::Kind::lex) return ctx_.dim;
  return static_cast<int>(exponents_.size());
}

Level Window::level_at(int level_index) const {
  if (level_index < 0 || level_index >= levels()) {
    fail(ErrorCode::internal, "window level out of range");
  }
  if (ctx_.kind == GroupCtx::Kind::lex) {
    return Level::lex_at(level_index + 1);
  }
  return Level::hahn_at(exponents_[level_index]);
}

std::optional<int> Window::level_index(const Level& level) const {
  if (ctx_.kind == GroupCtx::Kind::lex) {
    if (level.kind != GroupCtx::Kind::lex) {
      fail(ErrorCode::context_mismatch, "hahn level in a lex window");
    }
    if (level.index < 1 || level.index > ctx_.dim) return std::nullopt;
    return level.index - 1;
  }
  if (level.kind != GroupCtx::Kind::hahn) {
    fail(ErrorCode::context_mismatch, "lex level in a hahn window");
  }
  auto it = std::lower_bound(
      exponents_.begin(), exponents_.end(), level.exponent,
      [](const Rational& a, const Rational& b) { return a > b; });
  if (it == exponents_.end() || !(*it == level.exponent)) return std::nullopt;
  return static_cast<int>(it - exponents_.begin());
}

bool Window::contains(const GroupElement& g) const {
  if (g.ctx() != ctx_) return false;
  if (ctx_.kind == GroupCtx::Kind::lex) return true;
  for (auto& t : g.terms()) {
    if (!level_index(Level::hahn_at(t.exponent)).has_value()) return false;
  }
  return true;
}

std::optional<RatVec> Window::coords(const GroupElement& g) const {
  if (g.ctx() != ctx_) {
    fail(ErrorCode::context_mismatch,
         "element of " + g.ctx().to_string() + " in a window over " +
             ctx_.to_string());
  }
  int w = ctx_.field.width();
  RatVec out(static_cast<size_t>(slots()), Rational(0));
  if (ctx_.kind == GroupCtx::Kind::lex) {
    for (int i = 0; i < ctx_.dim; ++i) {
      const Scalar& c = g.coords()[i];
      out[static_cast<size_t>(i * w)] = c.a;
      if (w == 2) out[static_cast<size_t>(i * w + 1)] = c.b;
    }
    return out;
  }
  for (auto& t : g.terms()) {
    auto idx = level_index(Level::hahn_at(t.exponent));
    if (!idx.has_value()) return std::nullopt;
    out[static_cast<size_t>(*idx * w)] = t.coeff.a;
    if (w == 2) out[static_cast<size_t>(*idx * w + 1)] = t.coeff.b;
  }
  return out;
}

GroupElement Window::element(const RatVec& v) const {
  if (static_cast<int>(v.size()) != slots()) {
    fail(ErrorCode::dimension_mismatch, "coordinate vector size mismatch");
  }
  int w = ctx_.field.width();
  if (ctx_.kind == GroupCtx::Kind::lex) {
    std::vector<Scalar> coords;
    coords.reserve(static_cast<size_t>(ctx_.dim));
    for (int i = 0; i < ctx_.dim; ++i) {
      Rational b = w == 2 ? v[static_cast<size_t>(i * w + 1)] : Rational(0);
      coords.emplace_back(v[static_cast<size_t>(i * w)], b, ctx_.field.d());
    }
    return GroupElement::lex(ctx_, std::move(coords));
  }
  TermList terms;
  for (int i = 0; i < levels(); ++i) {
    Rational b = w == 2 ? v[static_cast<size_t>(i * w + 1)] : Rational(0);
    Scalar c(v[static_cast<size_t>(i * w)], b, ctx_.field.d());
    if (!c.is_zero()) terms.push_back({exponents_[static_cast<size_t>(i)], c});
  }
  return GroupElement::hahn(ctx_, std::move(terms));
}

Window Window::merged(const Window& other) const {
  if (ctx_ != other.ctx_) {
    fail(ErrorCode::context_mismatch, "merging windows over mixed contexts");
  }
  if (ctx_.kind == GroupCtx::Kind::lex) return *this;
  std::vector<Rational> exps = exponents_;
  exps.insert(exps.end(), other.exponents_.begin(), other.exponents_.end());
  return of_exponents(ctx_, std::move(exps));
}

std::vector<int> Window::embedding(const Window& into) const {
  if (ctx_ != into.ctx_) {
    fail(ErrorCode::context_mismatch, "embedding between mixed contexts");
  }
  int w = ctx_.field.width();
  std::vector<int> map;
  map.reserve(static_cast<size_t>(slots()));
  for (int l = 0; l < levels(); ++l) {
    auto idx = into.level_index(level_at(l));
    if (!idx.has_value()) {
      fail(ErrorCode::internal, "window is not contained in the target");
    }
    for (int k = 0; k < w; ++k) map.push_back(*idx * w + k);
  }
  return map;
}

Echelon rref(RatMatrix rows) {
  size_t cols = 0;
  for (auto& r : rows) cols = std::max(cols, r.size());
  for (auto& r : rows) r.resize(cols, Rational(0));

  Echelon out;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    Rational inv = rows[row][col].reciprocal();
    for (size_t c = col; c < cols; ++c) rows[row][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      Rational factor = rows[r][col];
      for (size_t c = col; c < cols; ++c) {
        rows[r][c] -= factor * rows[row][c];
      }
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  out.rows.assign(rows.begin(), rows.begin() + static_cast<long>(row));
  return out;
}

int mat_rank(RatMatrix rows) { return rref(std::move(rows)).rank(); }

PrefixSolve solve_prefix(const Echelon& ech, const RatVec& target,
                         int slot_limit) {
  PrefixSolve out;
  out.coeffs.reserve(ech.rows.size());
  for (size_t r = 0; r < ech.rows.size(); ++r) {
    int p = ech.pivots[r];
    out.coeffs.push_back(p < slot_limit ? target[static_cast<size_t>(p)]
                                        : Rational(0));
  }
  for (int s = 0; s < slot_limit; ++s) {
    Rational acc(0);
    for (size_t r = 0; r < ech.rows.size(); ++r) {
      if (!out.coeffs[r].is_zero()) {
        acc += out.coeffs[r] * ech.rows[r][static_cast<size_t>(s)];
      }
    }
    if (!(acc == target[static_cast<size_t>(s)])) {
      out.ok = false;
      out.mismatch_slot = s;
      return out;
    }
  }
  out.ok = true;
  return out;
}

std::optional<RatVec> solve_in_rowspace(const Echelon& ech,
                                        const RatVec& target) {
  size_t cols = ech.rows.empty() ? target.size() : ech.rows.front().size();
  if (target.size() != cols) {
    fail(ErrorCode::dimension_mismatch, "target size mismatch in solve");
  }
  PrefixSolve s = solve_prefix(ech, target, static_cast<int>(cols));
  if (!s.ok) return std::nullopt;
  return s.coeffs;
}

RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
  RatVec out;
  out.reserve(m.size());
  for (auto& row : m) {
    if (row.size() != v.size()) {
      fail(ErrorCode::dimension_mismatch, "matrix-vector size mismatch");
    }
    Rational acc(0);
    for (size_t i = 0; i < v.size(); ++i) acc += row[i] * v[i];
    out.push_back(acc);
  }
  return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  size_t inner = b.size();
  size_t cols = inner == 0 ? 0 : b.front().size();
  RatMatrix out;
  out.reserve(a.size());
  for (auto& row : a) {
    if (row.size() != inner) {
      fail(ErrorCode::dimension_mismatch, "matrix product size mismatch");
    }
    RatVec orow(cols, Rational(0));
    for (size_t k = 0; k < inner; ++k) {
      if (row[k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) orow[j] += row[k] * b[k][j];
    }
    out.push_back(std::move(orow));
  }
  return out;
}

RatMatrix mat_identity(int n) {
  RatMatrix out(static_cast<size_t>(n),
                RatVec(static_cast<size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) {
    out[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
  }
  return out;
}

RatMatrix mat_transpose(const RatMatrix& m) {
  size_t cols = m.empty() ? 0 : m.front().size();
  RatMatrix out(cols, RatVec(m.size(), Rational(0)));
  for (size_t r = 0; r < m.size(); ++r) {
    for (size_t c = 0; c < cols; ++c) out[c][r] = m[r][c];
  }
  return out;
}

std::optional<RatMatrix> mat_inverse(const RatMatrix& m) {
  size_t n = m.size();
  RatMatrix aug;
  aug.reserve(n);
  for (size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) {
      fail(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
    }
    RatVec row = m[r];
    for (size_t c = 0; c < n; ++c) {
      row.push_back(r == c ? Rational(1) : Rational(0));
    }
    aug.push_back(std::move(row));
  }
  Echelon e = rref(std::move(aug));
  if (e.rank() != static_cast<int>(n)) return std::nullopt;
  for (size_t r = 0; r < n; ++r) {
    if (e.pivots[r] != static_cast<int>(r)) return std::nullopt;
  }
  RatMatrix out;
  out.reserve(n);
  for (size_t r = 0; r < n; ++r) {
    out.emplace_back(e.rows[r].begin() + static_cast<long>(n),
                     e.rows[r].end());
  }
  return out;
}

RatMatrix nullspace(const RatMatrix& m, int cols) {
  RatMatrix padded = m;
  for (auto& r : padded) r.resize(static_cast<size_t>(cols), Rational(0));
  Echelon e = rref(std::move(padded));
  std::set<int> pivot_set(e.pivots.begin(), e.pivots.end());
  RatMatrix basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_set.count(f)) continue;
    RatVec x(static_cast<size_t>(cols), Rational(0));
    x[static_cast<size_t>(f)] = Rational(1);
    for (size_t r = 0; r < e.rows.size(); ++r) {
      x[static_cast<size_t>(e.pivots[r])] = -e.rows[r][static_cast<size_t>(f)];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& rhs) {
  if (m.size() != rhs.size()) {
    fail(ErrorCode::dimension_mismatch, "system size mismatch");
  }
  size_t cols = m.empty() ? 0 : m.front().size();
  RatMatrix aug;
  aug.reserve(m.size());
  for (size_t r = 0; r < m.size(); ++r) {
    RatVec row = m[r];
    row.resize(cols, Rational(0));
    row.push_back(rhs[r]);
    aug.push_back(std::move(row));
  }
  Echelon e = rref(std::move(aug));
  RatVec x(cols, Rational(0));
  for (size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == static_cast<int>(cols)) return std::nullopt;
    x[static_cast<size_t>(e.pivots[r])] = e.rows[r].back();
  }
  return x;
}

Echelon reexpand(const Echelon& ech, const std::vector<int>& slot_map,
                 int new_slots) {
  Echelon out;
  out.pivots.reserve(ech.pivots.size());
  for (int p : ech.pivots) {
    out.pivots.push_back(slot_map[static_cast<size_t>(p)]);
  }
  out.rows.reserve(ech.rows.size());
  for (auto& row : ech.rows) {
    RatVec wide(static_cast<size_t>(new_slots), Rational(0));
    for (size_t s = 0; s < row.size(); ++s) {
      wide[static_cast<size_t>(slot_map[s])] = row[s];
    }
    out.rows.push_back(std::move(wide));
  }
  return out;
}

}  // namespace ogtame
