// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_TAME_HPP
#define OGTAME_TAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "checkresult.hpp"
#include "morphism.hpp"
#include "subgroup.hpp"

namespace ogtame {

enum class StCase {
  exact,
  nearest_below,
  nearest_above,
  not_bounded,
  no_nearest,
};

const char* st_case_name(StCase c);

// Outcome of a standard-part computation. The nearest cases carry the
// unique member of S realizing the case. NoNearest carries the residual
// b - delta0 for the best pivot candidate delta0, plus a positive
// member of S below |residual| certifying that delta0 fails.
struct StResult {
  StCase kind = StCase::not_bounded;
  std::optional<GroupElement> value;
  std::optional<GroupElement> residual;
  std::optional<GroupElement> certificate;
};

// Convex subgroup of the ambient sitting strictly below every positive
// member of S: all support at levels strictly less significant than S's
// least pivot level.
struct InfinitesimalLevel {
  Level least_pivot;

  bool member(const GroupElement& g) const;
  std::string describe() const;
};

InfinitesimalLevel infinitesimal_level(const Subgroup& s);

// True iff a1 <= b <= a2 for some a1, a2 in S. Decided by comparing
// lead(b) with S's most significant level; coefficient-field density
// makes the level comparison sufficient.
bool is_bounded(const Subgroup& s, const GroupElement& b);

// Nearest member of S to b modulo the infinitesimal level, with exact
// case classification; see StResult.
StResult standard_part(const Subgroup& s, const GroupElement& b);

// Positive member of S lying weakly below |r|; rejects r = 0 and r
// infinitesimal relative to S. Used to certify NoNearest residuals.
GroupElement positive_below(const Subgroup& s, const GroupElement& r);

class Sampler;

// Draws an S-bounded element: support only at levels dominated by S's
// top level. The zero subgroup bounds only zero.
GroupElement sample_bounded(const Subgroup& s, Sampler& rng);

struct TameResult {
  bool tame = false;
  std::optional<GroupElement> witness;
};

// Structural tameness decision: within the level range spanned by S's
// pivots, every coordinate direction must be reachable. The verdict is
// cross-validated by seeded standard_part runs; contradiction raises
// oracle_disagreement.
TameResult decide_tame(const Subgroup& s);

struct SectionCheck {
  bool yes = false;
  std::string reason;  // names the first failing clause
};

// Whether f restricted to S is an isomorphism onto the target:
// injectivity (S meets ker f trivially), surjectivity (images of S's
// basis span the target window), and divisibility of S.
SectionCheck check_cross_section(const Morphism& f, const Subgroup& s);

// Full equivalence report: clause (a) is the cross-section property,
// (b) divisible + tame + cofinal, (c) kernel identity, (d) sign
// compatibility, (e) the retract laws. The verdict asserts that (a),
// (b and c), (b and d) agree.
struct EquivalenceReport {
  CheckResult a;
  CheckResult b_divisible;
  CheckResult b_tame;
  CheckResult b_cofinal;
  CheckResult c_kernel;
  CheckResult d_sign;
  CheckResult e_retract;
  CheckResult e_idempotent;
  CheckResult e_additive;
  CheckResult e_order;

  bool side_a = false;
  bool side_bc = false;
  bool side_bd = false;
  bool verdict = false;
  bool all_pass = false;

  std::vector<const CheckResult*> checks() const;
};

EquivalenceReport equivalence_report(const Morphism& f, const Subgroup& s,
                                     uint64_t seed, long cases);

}  // namespace ogtame

#endif  // OGTAME_TAME_HPP
