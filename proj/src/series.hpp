// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_SERIES_HPP
#define OGTAME_SERIES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "checkresult.hpp"
#include "element.hpp"

namespace ogtame {

// A finite-support series sum c_i * x^{e_i} with exact coefficients,
// treated as a member of the ordered field of such series: terms are
// kept with strictly descending exponents, the sign is the sign of
// the leading coefficient, and x^1 exceeds every constant.
class Series {
 public:
  explicit Series(const Field& field);
  Series(const Field& field, TermList terms);

  static Series zero(const Field& field);
  static Series constant(const Field& field, const Scalar& c);
  static Series monomial(const Field& field, const Scalar& c,
                         const Rational& exponent);

  const Field& field() const { return field_; }
  const TermList& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  // Coefficient at the given exponent, zero if absent.
  Scalar coeff_at(const Rational& exponent) const;

 private:
  Field field_;
  TermList terms_;
};

Series ser_add(const Series& a, const Series& b);
Series ser_sub(const Series& a, const Series& b);
Series ser_neg(const Series& a);
Series ser_abs(const Series& a);
Series ser_mul(const Series& a, const Series& b);
Series ser_scale(const Scalar& c, const Series& a);

// Nonnegative integer power.
Series ser_pow(const Series& a, long k);

int ser_sign(const Series& a);
int ser_cmp(const Series& a, const Series& b);
bool ser_eq(const Series& a, const Series& b);

// Leading exponent. Fails with zero_element on the zero series.
Rational valuation(const Series& a);
Scalar leading_coeff(const Series& a);

std::string format_series(const Series& a);
Series parse_series(const Field& field, std::string_view text);

// Round-trips with the one-dimensional additive view of the same data.
GroupElement series_to_element(const Series& a);
Series element_to_series(const GroupElement& x);

// A series together with a truncation guard. When truncated, every
// kept term has exponent >= guard and is exact, and every term with
// exponent < guard has been dropped; the hidden error therefore has
// valuation strictly below guard. Exact values carry no guard.
struct PrecSeries {
  Series value;
  bool truncated = false;
  Rational guard;

  static PrecSeries exact(Series v);
  static PrecSeries approx(Series v, Rational guard);

  // Width of the guaranteed window below the leading exponent.
  // Meaningful only when truncated.
  Rational precision() const;
};

PrecSeries ps_add(const PrecSeries& a, const PrecSeries& b);
PrecSeries ps_sub(const PrecSeries& a, const PrecSeries& b);
PrecSeries ps_neg(const PrecSeries& a);
PrecSeries ps_mul(const PrecSeries& a, const PrecSeries& b);

// Exact comparison; refuses with precision_exceeded when the verdict
// would depend on truncated tails. A verdict, once returned, cannot
// be overturned by recomputing at higher precision.
int ps_cmp(const PrecSeries& a, const PrecSeries& b);

std::string format_prec_series(const PrecSeries& a);

// Multiplicative inverse by geometric expansion. The result window
// covers exponents down to -valuation(a) - precision inclusive; the
// leading term is exactly leading_coeff(a)^{-1} x^{-valuation(a)}.
// Monomial inputs invert exactly.
PrecSeries series_inv(const Series& a, const Rational& precision);

class Sampler;

// Deterministic small series for sampled checks: up to max_terms
// terms with single-digit exponents and coefficients.
Series sample_series(const Field& field, Sampler& rng, int max_terms);
Series sample_nonzero_series(const Field& field, Sampler& rng, int max_terms);

// Report on the leading-exponent valuation: both valuation axioms and
// order-compatibility, sampled exactly.
struct ValuationReport {
  std::string header;
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

ValuationReport v_compat_check(const Field& field, uint64_t seed, long cases);

// Shared report header recording the ambient concession: the series
// field is not real closed, so every verdict is computed from exact
// leading-term data and finite arithmetic only.
std::string series_report_header(const Field& field);

}  // namespace ogtame

#endif  // OGTAME_SERIES_HPP
