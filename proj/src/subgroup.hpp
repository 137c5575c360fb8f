// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_SUBGROUP_HPP
#define OGTAME_SUBGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcoords.hpp"

namespace ogtame {

// Span ring for a finitely generated subgroup. Q-spans are divisible;
// Z-spans usually are not and most structure checks reject them.
enum class Ring { q, z };

inline const char* ring_name(Ring r) { return r == Ring::q ? "Q" : "Z"; }

// Finitely generated subgroup of a lex or hahn ambient group, stored as
// the original generators plus a reduced echelon basis over the window
// spanned by the generators' supports.
class Subgroup {
 public:
  Subgroup(GroupCtx ambient, std::vector<GroupElement> generators, Ring ring);

  static Subgroup trivial(GroupCtx ambient, Ring ring = Ring::q);

  const GroupCtx& ambient() const { return ambient_; }
  Ring ring() const { return ring_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const Window& window() const { return window_; }
  const Echelon& echelon() const { return echelon_; }
  const std::vector<GroupElement>& basis() const { return basis_; }

  int dim() const { return echelon_.rank(); }
  bool is_trivial() const { return echelon_.rows.empty(); }

  // Coordinates of g over the echelon basis, or nullopt when g is not a
  // member. For Z-spans membership additionally demands integrality of
  // the coordinates over the original generators.
  std::optional<RatVec> coords(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return coords(g).has_value(); }

  // Element rebuilt from echelon-basis coordinates.
  GroupElement from_coords(const RatVec& v) const;

  // Levels of the first and the last pivot; reject the trivial subgroup.
  Level top_level() const;
  Level least_pivot_level() const;

  std::string describe() const;

 private:
  GroupCtx ambient_;
  Ring ring_;
  std::vector<GroupElement> generators_;
  Window window_;
  Echelon echelon_;
  Echelon generator_rows_;  // echelon of generator coordinates kept as rows
  RatMatrix generator_matrix_;
  std::vector<GroupElement> basis_;
};

}  // namespace ogtame

#endif  // OGTAME_SUBGROUP_HPP
