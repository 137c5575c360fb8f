// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_MORPHISM_HPP
#define OGTAME_MORPHISM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subgroup.hpp"

namespace ogtame {

// One stage of a morphism pipeline, applied in listed order.
struct MorphismStage {
  enum class Kind { projection, hahn_truncate, shear };

  Kind kind = Kind::projection;
  int keep = 0;     // projection: keep the most significant coordinates
  Rational cut;     // hahn_truncate: keep exponents >= cut
  RatMatrix shear;  // shear: order-automorphism on the coordinate slots

  static MorphismStage projection(int keep);
  static MorphismStage hahn_truncate(Rational cut);
  static MorphismStage make_shear(RatMatrix t);
};

struct OrderCheck {
  bool preserving = false;
  // A positive domain element whose image is negative, when not
  // preserving.
  std::optional<GroupElement> witness;
};

// Decides whether the linear map given by matrix on coordinate slots is
// an order-preserving homomorphism from the domain lex group onto the
// target lex group, and produces an exact witness otherwise. The
// structural verdict is cross-checked against a seeded sampling oracle;
// disagreement raises an oracle_disagreement error.
OrderCheck is_order_preserving(const GroupCtx& domain, const GroupCtx& target,
                               const RatMatrix& matrix);

// Kernel of a morphism with decidable membership. Lex kernels carry a
// finite span; hahn kernels are the elements supported strictly below
// the cut.
class KernelDesc {
 public:
  static KernelDesc lex_span(Subgroup span);
  static KernelDesc hahn_below(GroupCtx ambient, Rational cut);

  bool member(const GroupElement& g) const;
  const std::optional<Subgroup>& span() const { return span_; }
  const std::optional<Rational>& cut() const { return cut_; }
  int dim() const;  // lex only
  std::string describe() const;

 private:
  KernelDesc() = default;
  GroupCtx ambient_;
  std::optional<Subgroup> span_;
  std::optional<Rational> cut_;
};

// Surjective order-preserving homomorphism built from a stage pipeline:
// projections and shears over a lex domain, truncations over a hahn
// domain. Shears are validated as order-automorphisms at construction.
class Morphism {
 public:
  static Morphism make(GroupCtx domain, std::vector<MorphismStage> stages);

  const GroupCtx& domain() const { return domain_; }
  const GroupCtx& target() const { return target_; }
  const std::vector<MorphismStage>& stages() const { return stages_; }
  bool is_lex() const { return domain_.kind == GroupCtx::Kind::lex; }

  // Effective slot matrix of the whole pipeline (lex only).
  const RatMatrix& matrix() const;
  // Effective truncation threshold (hahn only).
  const Rational& cut() const;

  GroupElement apply(const GroupElement& g) const;
  const KernelDesc& kernel() const { return *kernel_; }

  std::string describe() const;

 private:
  Morphism() = default;
  GroupCtx domain_;
  GroupCtx target_;
  std::vector<MorphismStage> stages_;
  RatMatrix matrix_;
  Rational cut_;
  std::shared_ptr<const KernelDesc> kernel_;
};

// Graph of the linear section s(delta) = lift(delta) + K(T delta),
// where lift is the canonical right inverse of f's matrix and K turns
// kernel coordinates into kernel elements. T has one row per kernel
// basis vector and one column per target slot. Lex morphisms only.
Subgroup section_subgroup(const Morphism& f, const RatMatrix& t);

// Basis-extension complement: a span meeting the kernel trivially with
// coordinates jointly spanning the whole domain window. Lex morphisms
// only.
Subgroup complement_of_kernel(const Morphism& f);

}  // namespace ogtame

#endif  // OGTAME_MORPHISM_HPP
