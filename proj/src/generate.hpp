// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_GENERATE_HPP
#define OGTAME_GENERATE_HPP

#include <cstdint>
#include <functional>

#include "morphism.hpp"
#include "series.hpp"
#include "subgroup.hpp"
#include "tame.hpp"

namespace ogtame {

// Deterministic generation budget: identical (seed, index, size)
// produces identical values on every run and platform.
struct GenConfig {
  uint64_t seed = 0;
  int size = 6;  // bounds numerators, denominators, dimensions, support
};

// Every generator draws from its own stream, keyed by (seed, stream,
// index), so suites can evaluate indices independently.
Scalar gen_scalar(const Field& field, const GenConfig& cfg, uint64_t index);
GroupElement gen_element(const GroupCtx& ctx, const GenConfig& cfg,
                         uint64_t index);
Subgroup gen_subgroup(const GroupCtx& ctx, Ring ring, const GenConfig& cfg,
                      uint64_t index);
Series gen_series(const Field& field, const GenConfig& cfg, uint64_t index);

// Valid-by-construction order-preserving morphism out of the given
// context; candidates are still vetted with is_order_preserving and
// rejection-sampled up to a fixed retry bound (budget_exhausted
// afterwards).
Morphism gen_morphism(const GroupCtx& ctx, const GenConfig& cfg,
                      uint64_t index);

// Graph of a random linear map from the kernel into a lift of the
// target: a cross-section image by construction.
Subgroup gen_graph_section(const Morphism& f, const GenConfig& cfg,
                           uint64_t index);

// An S-bounded ambient element.
GroupElement gen_element_bounded(const Subgroup& s, const GenConfig& cfg,
                                 uint64_t index);

// Greedy predicate-driven minimization. The predicate must fail
// (return true) on the input; the result still fails and no single
// shrink move on it does. Moves: drop generators or terms, zero
// coordinates, shrink numerators and denominators toward 0 and 1.
Rational shrink_rational(const Rational& value,
                         const std::function<bool(const Rational&)>& fails);
Scalar shrink_scalar(const Scalar& value,
                     const std::function<bool(const Scalar&)>& fails);
GroupElement shrink_element(
    const GroupElement& value,
    const std::function<bool(const GroupElement&)>& fails);
Series shrink_series(const Series& value,
                     const std::function<bool(const Series&)>& fails);
Subgroup shrink_subgroup(const Subgroup& value,
                         const std::function<bool(const Subgroup&)>& fails);

// Complexity measure driving the shrink order; every accepted move
// strictly decreases it, so shrinking terminates.
unsigned long complexity(const Rational& q);
unsigned long complexity(const Scalar& s);
unsigned long complexity(const GroupElement& g);
unsigned long complexity(const Series& s);
unsigned long complexity(const Subgroup& s);

}  // namespace ogtame

#endif  // OGTAME_GENERATE_HPP
