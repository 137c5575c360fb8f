// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_MONOMIAL_HPP
#define OGTAME_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "series.hpp"
#include "tame.hpp"

namespace ogtame {

// A divisible subgroup of the positive cone of the series field,
// stored symbolically: either {x^q : q rational} or, with a fixed
// positive rational base distinct from 1, {base^p * x^q : p, q
// rational}. Elements are exponent pairs; comparison against a
// series is exact via integer-power cross-comparison.
class MonomialGroup {
 public:
  enum class Kind { xq, coeff_xq };

  static MonomialGroup xq(const Field& field);
  static MonomialGroup coeff_xq(const Field& field, const Rational& base);

  Kind kind() const { return kind_; }
  const Field& field() const { return field_; }
  const Rational& base() const { return base_; }
  std::string describe() const;

 private:
  MonomialGroup(Kind k, Field f, Rational base);

  Kind kind_;
  Field field_;
  Rational base_;  // 1 for the pure x^q group
};

// The element base^p * x^q; p stays 0 in the pure x^q group.
struct MonoElt {
  Rational p;
  Rational q;
};

MonoElt mono_one();
MonoElt mono_mul(const MonoElt& a, const MonoElt& b);
MonoElt mono_inv(const MonoElt& a);
MonoElt mono_pow(const MonoElt& a, const Rational& k);
bool mono_elt_eq(const MonoElt& a, const MonoElt& b);

// Group order: the x-exponent dominates, then the coefficient power.
int mono_cmp(const MonomialGroup& g, const MonoElt& a, const MonoElt& b);

std::string format_mono(const MonomialGroup& g, const MonoElt& m);

// Exact order comparison of a monomial against a series: leading
// exponents first, then base^p against the leading coefficient c by
// cross-powering (base^a vs c^b for p = a/b), then the tail sign.
int cmp_mono_series(const MonomialGroup& g, const MonoElt& m, const Series& s);

// Exact solution p of base^p = value over the rationals, decided by
// prime factorization; empty when no rational power works.
std::optional<Rational> rational_log(const Rational& base,
                                     const Rational& value);

// Standard part of a positive series relative to the monomial group:
// either the nearest group element (with the exact/below/above
// classification) or a certified no-nearest verdict carrying the
// multiplicative residual c * base^{-p0} for the bracketing power p0.
struct MonoSt {
  StCase kind = StCase::exact;
  std::optional<MonoElt> value;
  std::optional<Scalar> residual;
  std::optional<Rational> bracket;
  std::string note;
};

MonoSt st_positive(const MonomialGroup& g, const Series& r);

// A group element h with 1 < h <= rho, for a scalar rho > 1: the
// multiplicative analogue of an additive positivity certificate. The
// pure x^q group has no such element for constant rho; only the
// coefficient group supports this.
MonoElt mono_positive_below(const MonomialGroup& g, const Scalar& rho);

// Valuation-ring membership: zero, or leading exponent <= 0 (which
// for the pure x^q group coincides with st(|a|) <= 1).
bool in_valuation_ring(const Series& a);

// Coefficient at exponent 0; requires valuation-ring membership.
Scalar residue(const Series& a);

// Report verifying the induced-valuation laws on seeded samples:
// st(2) <= 1, the ultrametric inequality, multiplicativity and
// order-compatibility of st on the positive cone, value-group
// agreement st(|a|) = x^{v(a)}, the kernel identity v(r) = 0 iff
// st(r) = 1, and the valuation-ring identity by cross-checking
// membership predicates.
ValuationReport induced_valuation_check(const MonomialGroup& g, uint64_t seed,
                                        long cases);

}  // namespace ogtame

#endif  // OGTAME_MONOMIAL_HPP
