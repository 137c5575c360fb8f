// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_QCOORDS_HPP
#define OGTAME_QCOORDS_HPP

#include <optional>
#include <vector>

#include "element.hpp"

namespace ogtame {

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

// A finite list of levels inside which elements are flattened to plain
// rational coordinate vectors. For lex groups the window is always the
// full coordinate range; for hahn groups it is a finite strictly
// descending list of exponents. Each level contributes width(F) slots,
// rational part first, ordered from most significant level to least.
class Window {
 public:
  static Window full(const GroupCtx& ctx);  // lex only
  static Window of_exponents(const GroupCtx& ctx,
                             std::vector<Rational> exponents);
  static Window for_elements(const GroupCtx& ctx,
                             const std::vector<GroupElement>& elements);

  const GroupCtx& ctx() const { return ctx_; }
  const std::vector<Rational>& exponents() const { return exponents_; }

  int levels() const;
  int slots() const { return levels() * ctx_.field.width(); }
  Level level_at(int level_index) const;
  int level_of_slot(int slot) const { return slot / ctx_.field.width(); }

  // Position of the given level in this window, if present.
  std::optional<int> level_index(const Level& level) const;

  bool contains(const GroupElement& g) const;
  std::optional<RatVec> coords(const GroupElement& g) const;
  GroupElement element(const RatVec& v) const;

  Window merged(const Window& other) const;
  // Maps each slot of this window to its slot in the enclosing window.
  std::vector<int> embedding(const Window& into) const;

  bool operator==(const Window& o) const {
    return ctx_ == o.ctx_ && exponents_ == o.exponents_;
  }

 private:
  explicit Window(GroupCtx ctx) : ctx_(std::move(ctx)) {}
  GroupCtx ctx_;
  std::vector<Rational> exponents_;  // hahn only
};

// Reduced row echelon form with unit pivots; zero rows are dropped and
// pivot columns are strictly increasing.
struct Echelon {
  RatMatrix rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }
};

Echelon rref(RatMatrix rows);
int mat_rank(RatMatrix rows);

// Expresses target in the row space, checking slots [0, slot_limit)
// only. Rows whose pivot lies beyond the limit get coefficient 0 and
// cannot disturb the checked prefix. On failure, mismatch_slot is the
// most significant slot where no combination can match.
struct PrefixSolve {
  bool ok = false;
  RatVec coeffs;
  int mismatch_slot = -1;
};

PrefixSolve solve_prefix(const Echelon& ech, const RatVec& target,
                         int slot_limit);
std::optional<RatVec> solve_in_rowspace(const Echelon& ech,
                                        const RatVec& target);

RatVec mat_vec(const RatMatrix& m, const RatVec& v);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_identity(int n);
RatMatrix mat_transpose(const RatMatrix& m);
std::optional<RatMatrix> mat_inverse(const RatMatrix& m);

// Basis (as rows) of the right kernel {x : m x = 0}, derived from the
// reduced echelon form; deterministic for a given input.
RatMatrix nullspace(const RatMatrix& m, int cols);

// Particular solution of m x = rhs with all free variables set to 0.
std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& rhs);

// Rewrites echelon rows over a larger window; slot_map sends old slot
// indices to new ones and must be strictly increasing.
Echelon reexpand(const Echelon& ech, const std::vector<int>& slot_map,
                 int new_slots);

}  // namespace ogtame

#endif  // OGTAME_QCOORDS_HPP
