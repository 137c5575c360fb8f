// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "series.hpp"

#include <algorithm>
#include <utility>

#include "errors.hpp"
#include "rng.hpp"
#include "sampling.hpp"

namespace ogtame {

namespace {

TermList checked_terms(const Field& field, TermList terms) {
  for (auto& t : terms) t.coeff = in_field(field, t.coeff);
  return normalize_terms(std::move(terms));
}

void require_same_field(const Series& a, const Series& b) {
  if (!(a.field() == b.field())) {
    fail(ErrorCode::field_mismatch,
         "series over " + a.field().to_string() + " combined with series over " +
             b.field().to_string());
  }
}

}  // namespace

Series::Series(const Field& field) : field_(field) {}

Series::Series(const Field& field, TermList terms)
    : field_(field), terms_(checked_terms(field, std::move(terms))) {}

Series Series::zero(const Field& field) { return Series(field); }

Series Series::constant(const Field& field, const Scalar& c) {
  return monomial(field, c, Rational(0));
}

Series Series::monomial(const Field& field, const Scalar& c,
                        const Rational& exponent) {
  TermList terms;
  if (!c.is_zero()) terms.push_back({exponent, c});
  return Series(field, std::move(terms));
}

bool Series::is_one() const {
  return terms_.size() == 1 && terms_[0].exponent.is_zero() &&
         s_eq(terms_[0].coeff, Scalar(Rational(1)));
}

Scalar Series::coeff_at(const Rational& exponent) const {
  for (const auto& t : terms_) {
    if (t.exponent == exponent) return t.coeff;
    if (t.exponent < exponent) break;
  }
  return Scalar(Rational(0), Rational(0), field_.d());
}

Series ser_add(const Series& a, const Series& b) {
  require_same_field(a, b);
  TermList merged = a.terms();
  merged.insert(merged.end(), b.terms().begin(), b.terms().end());
  return Series(a.field(), std::move(merged));
}

Series ser_sub(const Series& a, const Series& b) {
  return ser_add(a, ser_neg(b));
}

Series ser_neg(const Series& a) {
  TermList terms = a.terms();
  for (auto& t : terms) t.coeff = s_neg(t.coeff);
  return Series(a.field(), std::move(terms));
}

Series ser_abs(const Series& a) {
  return ser_sign(a) < 0 ? ser_neg(a) : a;
}

Series ser_mul(const Series& a, const Series& b) {
  require_same_field(a, b);
  TermList products;
  products.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      products.push_back({ta.exponent + tb.exponent, s_mul(ta.coeff, tb.coeff)});
    }
  }
  return Series(a.field(), std::move(products));
}

Series ser_scale(const Scalar& c, const Series& a) {
  TermList terms = a.terms();
  for (auto& t : terms) t.coeff = s_mul(c, t.coeff);
  return Series(a.field(), std::move(terms));
}

Series ser_pow(const Series& a, long k) {
  if (k < 0) {
    fail(ErrorCode::unsupported_operation,
         "negative series power; invert explicitly instead");
  }
  Series acc = Series::constant(a.field(), Scalar(Rational(1)));
  Series base = a;
  while (k > 0) {
    if (k & 1) acc = ser_mul(acc, base);
    k >>= 1;
    if (k > 0) base = ser_mul(base, base);
  }
  return acc;
}

int ser_sign(const Series& a) {
  if (a.is_zero()) return 0;
  return s_sign(a.terms().front().coeff);
}

int ser_cmp(const Series& a, const Series& b) {
  return ser_sign(ser_sub(a, b));
}

bool ser_eq(const Series& a, const Series& b) { return ser_cmp(a, b) == 0; }

Rational valuation(const Series& a) {
  if (a.is_zero()) {
    fail(ErrorCode::zero_element, "the zero series has no valuation");
  }
  return a.terms().front().exponent;
}

Scalar leading_coeff(const Series& a) {
  if (a.is_zero()) {
    fail(ErrorCode::zero_element, "the zero series has no leading coefficient");
  }
  return a.terms().front().coeff;
}

std::string format_series(const Series& a) {
  GroupCtx ctx = GroupCtx::hahn(a.field());
  return format_element(GroupElement::hahn(ctx, a.terms()));
}

Series parse_series(const Field& field, std::string_view text) {
  GroupCtx ctx = GroupCtx::hahn(field);
  return Series(field, parse_element(ctx, text).terms());
}

GroupElement series_to_element(const Series& a) {
  GroupCtx ctx = GroupCtx::hahn(a.field());
  return GroupElement::hahn(ctx, a.terms());
}

Series element_to_series(const GroupElement& x) {
  if (x.ctx().kind != GroupCtx::Kind::hahn) {
    fail(ErrorCode::context_mismatch,
         "series view requires a hahn group element");
  }
  return Series(x.ctx().field, x.terms());
}

PrecSeries PrecSeries::exact(Series v) {
  PrecSeries p{std::move(v), false, Rational(0)};
  return p;
}

PrecSeries PrecSeries::approx(Series v, Rational guard) {
  TermList kept;
  for (const auto& t : v.terms()) {
    if (!(t.exponent < guard)) kept.push_back(t);
  }
  PrecSeries p{Series(v.field(), std::move(kept)), true, std::move(guard)};
  return p;
}

Rational PrecSeries::precision() const {
  if (!truncated || value.is_zero()) return Rational(0);
  return valuation(value) - guard;
}

PrecSeries ps_add(const PrecSeries& a, const PrecSeries& b) {
  Series sum = ser_add(a.value, b.value);
  if (!a.truncated && !b.truncated) return PrecSeries::exact(std::move(sum));
  Rational guard;
  if (a.truncated && b.truncated) {
    guard = std::max(a.guard, b.guard);
  } else {
    guard = a.truncated ? a.guard : b.guard;
  }
  return PrecSeries::approx(std::move(sum), std::move(guard));
}

PrecSeries ps_neg(const PrecSeries& a) {
  PrecSeries p{ser_neg(a.value), a.truncated, a.guard};
  return p;
}

PrecSeries ps_sub(const PrecSeries& a, const PrecSeries& b) {
  return ps_add(a, ps_neg(b));
}

PrecSeries ps_mul(const PrecSeries& a, const PrecSeries& b) {
  Series prod = ser_mul(a.value, b.value);
  if (!a.truncated && !b.truncated) return PrecSeries::exact(std::move(prod));
  // An exact zero factor absorbs the other side's error term as well.
  if (!a.truncated && a.value.is_zero()) return PrecSeries::exact(std::move(prod));
  if (!b.truncated && b.value.is_zero()) return PrecSeries::exact(std::move(prod));

  // The hidden error is err_a*b + a*err_b + err_a*err_b; each error
  // factor has valuation strictly below its guard, so bound the whole
  // error by the largest applicable exponent sum.
  bool have = false;
  Rational guard;
  auto raise = [&](const Rational& g) {
    if (!have || guard < g) {
      guard = g;
      have = true;
    }
  };
  if (a.truncated) {
    if (!b.value.is_zero()) raise(a.guard + valuation(b.value));
    if (b.truncated) raise(a.guard + b.guard);
  }
  if (b.truncated) {
    if (!a.value.is_zero()) raise(b.guard + valuation(a.value));
  }
  return PrecSeries::approx(std::move(prod), std::move(guard));
}

int ps_cmp(const PrecSeries& a, const PrecSeries& b) {
  PrecSeries d = ps_sub(a, b);
  if (!d.value.is_zero()) {
    // Kept terms are exact and dominate the hidden tail, whose
    // valuation lies strictly below the guard.
    return ser_sign(d.value);
  }
  if (!d.truncated) return 0;
  fail(ErrorCode::precision_exceeded,
       "comparison undecided: the difference vanishes above the exponent "
       "guard " +
           d.guard.to_string());
}

std::string format_prec_series(const PrecSeries& a) {
  std::string s = format_series(a.value);
  if (a.truncated) {
    s += " + o(x^" + format_exponent(a.guard) + ")";
  }
  return s;
}

PrecSeries series_inv(const Series& a, const Rational& precision) {
  if (a.is_zero()) {
    fail(ErrorCode::division_by_zero, "inverse of the zero series");
  }
  if (precision.sign() <= 0) {
    fail(ErrorCode::schema_error, "inverse precision must be positive");
  }
  const Rational lead_exp = valuation(a);
  const Scalar lead = leading_coeff(a);
  Series mono = Series::monomial(a.field(), s_inv(lead), -lead_exp);
  Series tail = ser_sub(a, Series::monomial(a.field(), lead, lead_exp));
  if (tail.is_zero()) return PrecSeries::exact(std::move(mono));

  // a * mono = 1 + u with v(u) < 0; the inverse of a is
  // mono * sum_k (-u)^k. A power (-u)^k only reaches exponents
  // <= k*v(u), so truncating the sum at k*v(u) >= -precision keeps
  // every term above the guard exact.
  Series u = ser_mul(tail, mono);
  const Rational mu = valuation(u);
  Rational ratio = precision / (-mu);
  mpz_class kmax_z;
  mpz_fdiv_q(kmax_z.get_mpz_t(), ratio.num().get_mpz_t(),
             ratio.den().get_mpz_t());
  if (kmax_z < 0) kmax_z = 0;
  if (kmax_z > 100000) {
    fail(ErrorCode::budget_exhausted,
         "inverse expansion needs " + kmax_z.get_str() +
             " geometric terms; lower the precision");
  }
  const long kmax = kmax_z.get_si();

  Series nu = ser_neg(u);
  Series sum = Series::constant(a.field(), Scalar(Rational(1)));
  Series pw = sum;
  for (long k = 1; k <= kmax; ++k) {
    pw = ser_mul(pw, nu);
    sum = ser_add(sum, pw);
  }
  Rational guard = -lead_exp - precision;
  return PrecSeries::approx(ser_mul(mono, sum), std::move(guard));
}

std::string series_report_header(const Field& field) {
  return "ambient: finite-support series field over " + field.to_string() +
         "; not real closed; every verdict uses exact leading-term data and "
         "finite arithmetic only";
}

Series sample_series(const Field& field, Sampler& rng, int max_terms) {
  TermList terms;
  const int count = rng.int_in(0, max_terms);
  for (int i = 0; i < count; ++i) {
    Rational e = sample_rational(rng, 6, 3);
    Scalar c = sample_scalar(field, rng);
    if (!c.is_zero()) terms.push_back({std::move(e), std::move(c)});
  }
  return Series(field, std::move(terms));
}

Series sample_nonzero_series(const Field& field, Sampler& rng, int max_terms) {
  for (int tries = 0; tries < 64; ++tries) {
    Series s = sample_series(field, rng, max_terms);
    if (!s.is_zero()) return s;
  }
  return Series::constant(field, Scalar(Rational(1)));
}

ValuationReport v_compat_check(const Field& field, uint64_t seed, long cases) {
  ValuationReport rep;
  rep.header = series_report_header(field);

  CheckResult mult;
  mult.name = "v(a*b) = v(a) + v(b)";
  {
    SampleStats st;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 11, static_cast<uint64_t>(i));
      Series a = sample_nonzero_series(field, rng, 4);
      Series b = sample_nonzero_series(field, rng, 4);
      ++st.total;
      if (!(valuation(ser_mul(a, b)) == valuation(a) + valuation(b))) {
        st.fail_case("a = " + format_series(a) + ", b = " + format_series(b));
      }
    }
    finish_check(mult, st);
  }
  rep.checks.push_back(mult);

  CheckResult ultra;
  ultra.name = "v(a+b) <= max(v(a), v(b)), equal when leading exponents differ";
  {
    SampleStats st;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 12, static_cast<uint64_t>(i));
      Series a = sample_nonzero_series(field, rng, 4);
      Series b = sample_nonzero_series(field, rng, 4);
      Series sum = ser_add(a, b);
      ++st.total;
      if (sum.is_zero()) {
        ++st.guarded;
        continue;
      }
      const Rational va = valuation(a);
      const Rational vb = valuation(b);
      const Rational vs = valuation(sum);
      const Rational vmax = std::max(va, vb);
      bool ok = !(vmax < vs);
      if (ok && !(va == vb)) ok = vs == vmax;
      if (!ok) {
        st.fail_case("a = " + format_series(a) + ", b = " + format_series(b));
      }
    }
    finish_check(ultra, st);
  }
  rep.checks.push_back(ultra);

  CheckResult order;
  order.name =
      "0 < a < b implies v(b) <= v(a) in the reversed value group "
      "(exponent order v(a) <= v(b))";
  {
    SampleStats st;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 13, static_cast<uint64_t>(i));
      Series a = ser_abs(sample_nonzero_series(field, rng, 4));
      Series b = ser_abs(sample_nonzero_series(field, rng, 4));
      ++st.total;
      if (ser_eq(a, b)) {
        ++st.guarded;
        continue;
      }
      if (ser_cmp(a, b) > 0) std::swap(a, b);
      if (valuation(b) < valuation(a)) {
        st.fail_case("a = " + format_series(a) + ", b = " + format_series(b));
      }
    }
    finish_check(order, st);
  }
  rep.checks.push_back(order);

  rep.all_pass = true;
  for (const auto& c : rep.checks) {
    if (c.evaluated && !c.pass) rep.all_pass = false;
  }
  return rep;
}

}  // namespace ogtame
