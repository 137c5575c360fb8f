// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "subgroup.hpp"

#include <utility>

#include "errors.hpp"

namespace ogtame {

namespace {

// Decides membership of v in the Z-row-span of gens by clearing
// denominators and running a gcd-based column elimination over the
// resulting integer lattice.
bool z_span_member(const RatMatrix& gens, const RatVec& v) {
  if (gens.empty()) {
    for (auto& x : v) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  size_t cols = v.size();
  mpz_class scale(1);
  for (auto& row : gens) {
    for (auto& x : row) {
      mpz_class den = x.den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
      scale = scale / g * den;
    }
  }
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(gens.size());
  for (auto& row : gens) {
    std::vector<mpz_class> irow(cols);
    for (size_t c = 0; c < cols; ++c) {
      irow[c] = row[c].num() * (scale / row[c].den());
    }
    rows.push_back(std::move(irow));
  }
  std::vector<mpz_class> target(cols);
  for (size_t c = 0; c < cols; ++c) {
    Rational scaled = v[c] * Rational(scale, mpz_class(1));
    if (!scaled.is_integer()) return false;
    target[c] = scaled.num();
  }

  size_t top = 0;
  for (size_t col = 0; col < cols; ++col) {
    // Fold every row with a nonzero entry in this column into one pivot
    // row via extended gcd steps.
    size_t pivot = top;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) {
      if (target[col] != 0) return false;
      continue;
    }
    std::swap(rows[top], rows[pivot]);
    for (size_t r = top + 1; r < rows.size(); ++r) {
      while (rows[r][col] != 0) {
        mpz_class q = rows[top][col] / rows[r][col];
        for (size_t c = col; c < cols; ++c) {
          rows[top][c] -= q * rows[r][c];
        }
        std::swap(rows[top], rows[r]);
      }
    }
    mpz_class g = rows[top][col];
    if (target[col] % g != 0) return false;
    mpz_class q = target[col] / g;
    for (size_t c = col; c < cols; ++c) target[c] -= q * rows[top][c];
    ++top;
    if (top == rows.size()) {
      for (size_t c = col + 1; c < cols; ++c) {
        if (target[c] != 0) return false;
      }
      return true;
    }
  }
  for (auto& x : target) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

Subgroup::Subgroup(GroupCtx ambient, std::vector<GroupElement> generators,
                   Ring ring)
    : ambient_(std::move(ambient)),
      ring_(ring),
      generators_(std::move(generators)),
      window_(Window::for_elements(ambient_, generators_)) {
  RatMatrix rows;
  rows.reserve(generators_.size());
  for (auto& g : generators_) {
    if (g.ctx() != ambient_) {
      fail(ErrorCode::context_mismatch,
           "generator of " + g.ctx().to_string() + " in " +
               ambient_.to_string());
    }
    rows.push_back(*window_.coords(g));
  }
  generator_matrix_ = rows;
  echelon_ = rref(std::move(rows));
  basis_.reserve(echelon_.rows.size());
  for (auto& row : echelon_.rows) basis_.push_back(window_.element(row));
}

Subgroup Subgroup::trivial(GroupCtx ambient, Ring ring) {
  return Subgroup(std::move(ambient), {}, ring);
}

std::optional<RatVec> Subgroup::coords(const GroupElement& g) const {
  if (g.ctx() != ambient_) {
    fail(ErrorCode::context_mismatch,
         "element of " + g.ctx().to_string() + " against a subgroup of " +
             ambient_.to_string());
  }
  auto v = window_.coords(g);
  if (!v.has_value()) return std::nullopt;
  auto sol = solve_in_rowspace(echelon_, *v);
  if (!sol.has_value()) return std::nullopt;
  if (ring_ == Ring::z && !z_span_member(generator_matrix_, *v)) {
    return std::nullopt;
  }
  return sol;
}

GroupElement Subgroup::from_coords(const RatVec& v) const {
  if (static_cast<int>(v.size()) != dim()) {
    fail(ErrorCode::dimension_mismatch, "subgroup coordinate size mismatch");
  }
  RatVec acc(static_cast<size_t>(window_.slots()), Rational(0));
  for (size_t r = 0; r < v.size(); ++r) {
    if (v[r].is_zero()) continue;
    for (size_t s = 0; s < acc.size(); ++s) {
      acc[s] += v[r] * echelon_.rows[r][s];
    }
  }
  return window_.element(acc);
}

Level Subgroup::top_level() const {
  if (is_trivial()) {
    fail(ErrorCode::zero_element, "trivial subgroup has no levels");
  }
  return window_.level_at(window_.level_of_slot(echelon_.pivots.front()));
}

Level Subgroup::least_pivot_level() const {
  if (is_trivial()) {
    fail(ErrorCode::zero_element, "trivial subgroup has no levels");
  }
  return window_.level_at(window_.level_of_slot(echelon_.pivots.back()));
}

std::string Subgroup::describe() const {
  std::string out = "span_";
  out += ring_name(ring_);
  out += "{";
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_element(generators_[i]);
  }
  out += "} in " + ambient_.to_string();
  return out;
}

}  // namespace ogtame
