// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "errors.hpp"
#include "rng.hpp"
#include "series.hpp"

using namespace ogtame;

namespace {

const Field kQ = Field::rationals();
const Field kQ2 = Field::quadratic(2);

Series ser(const char* text) { return parse_series(kQ, text); }

}  // namespace

TEST_CASE("series construction and normalization") {
  CHECK(Series::zero(kQ).is_zero());
  CHECK(Series::constant(kQ, Scalar(Rational(1))).is_one());
  CHECK(!Series::constant(kQ, Scalar(Rational(2))).is_one());
  const Series m = Series::monomial(kQ, Scalar(Rational(3)), Rational(1, 2));
  CHECK(format_series(m) == "3*x^(1/2)");
  CHECK(s_eq(m.coeff_at(Rational(1, 2)), Scalar(Rational(3))));
  CHECK(m.coeff_at(Rational(0)).is_zero());
  // Coefficients outside the field are rejected at construction.
  TermList bad = {{Rational(0), Scalar(Rational(1), Rational(1), 2)}};
  CHECK_THROWS_AS(Series(kQ, bad), Error);
}

TEST_CASE("series field arithmetic") {
  const Series a = ser("x^1 + 1");
  const Series b = ser("x^1 - 1");
  CHECK(format_series(ser_add(a, b)) == "2*x^1");
  CHECK(format_series(ser_sub(a, b)) == "2*x^0");
  CHECK(format_series(ser_mul(a, b)) == "1*x^2 - 1*x^0");
  CHECK(format_series(ser_neg(a)) == "-1*x^1 - 1*x^0");
  CHECK(format_series(ser_scale(Scalar(Rational(1, 2)), a)) ==
        "1/2*x^1 + 1/2*x^0");
  CHECK(format_series(ser_pow(ser("x^1 + 1"), 3)) ==
        "1*x^3 + 3*x^2 + 3*x^1 + 1*x^0");
  CHECK(ser_pow(a, 0).is_one());
  CHECK_THROWS_AS(ser_pow(a, -1), Error);
  CHECK(ser_eq(ser_mul(a, Series::zero(kQ)), Series::zero(kQ)));
}

TEST_CASE("series order: leading term decides") {
  CHECK(ser_sign(ser("x^2 - 1000*x^1")) > 0);
  CHECK(ser_sign(ser("-1/9*x^-5 + x^-6")) < 0);
  CHECK(ser_cmp(ser("x^1"), ser("999")) > 0);
  CHECK(ser_cmp(ser("x^-1"), ser("1/999")) < 0);   // infinitesimal
  CHECK(ser_cmp(ser("x^1 + 1"), ser("x^1")) > 0);
  CHECK(ser_eq(ser_abs(ser("-2*x^3")), ser("2*x^3")));
}

TEST_CASE("valuation and leading coefficient") {
  CHECK(valuation(ser("5*x^3 + x^-9")) == Rational(3));
  CHECK(valuation(ser("1/2")) == Rational(0));
  CHECK(s_eq(leading_coeff(ser("-7/2*x^3 + x^0")), Scalar(Rational(-7, 2))));
  CHECK_THROWS_AS(valuation(Series::zero(kQ)), Error);
  // Valuation is multiplicative and ultrametric on these samples.
  const Series a = ser("2*x^3 + x^1");
  const Series b = ser("x^-1 + x^-4");
  CHECK(valuation(ser_mul(a, b)) == valuation(a) + valuation(b));
}

TEST_CASE("series element round-trip") {
  const Series a = ser("3*x^2 + x^-1");
  CHECK(ser_eq(element_to_series(series_to_element(a)), a));
  const Series z = Series::zero(kQ);
  CHECK(ser_eq(element_to_series(series_to_element(z)), z));
}

TEST_CASE("series inverse: monomials invert exactly") {
  const PrecSeries inv =
      series_inv(ser("4*x^3"), Rational(5));
  CHECK(!inv.truncated);
  CHECK(format_series(inv.value) == "1/4*x^-3");
  CHECK(ser_mul(inv.value, ser("4*x^3")).is_one());
}

TEST_CASE("series inverse: geometric expansion with guard") {
  // 1/(1 + x^-1) = 1 - x^-1 + x^-2 - x^-3 + ... down to the guard.
  const PrecSeries inv = series_inv(ser("1 + x^-1"), Rational(3));
  CHECK(inv.truncated);
  CHECK(inv.guard == Rational(-3));
  CHECK(format_prec_series(inv) ==
        "1*x^0 - 1*x^-1 + 1*x^-2 - 1*x^-3 + o(x^-3)");
  // Independent verification: the inverse error has valuation strictly
  // below the guard, so a * inv(a) - 1 sits strictly below v(a) + guard.
  const Series check = ser_sub(ser_mul(ser("1 + x^-1"), inv.value),
                               Series::constant(kQ, Scalar(Rational(1))));
  for (const SeriesTerm& t : check.terms()) {
    CHECK(t.exponent < valuation(ser("1 + x^-1")) + inv.guard);
  }

  // A shifted input: 1/(x^2 + 1) starts at x^-2.
  const PrecSeries shifted = series_inv(ser("x^2 + 1"), Rational(4));
  CHECK(shifted.guard == Rational(-6));
  const Series residue2 = ser_sub(
      ser_mul(ser("x^2 + 1"), shifted.value),
      Series::constant(kQ, Scalar(Rational(1))));
  for (const SeriesTerm& t : residue2.terms()) {
    CHECK(t.exponent < Rational(2) + shifted.guard);
  }
  CHECK_THROWS_AS(series_inv(Series::zero(kQ), Rational(3)), Error);
  CHECK_THROWS_AS(series_inv(ser("1 + x^-1"), Rational(0)), Error);
  CHECK_THROWS_AS(series_inv(ser("1 + x^-1"), Rational(-2)), Error);
}

TEST_CASE("series inverse over a quadratic field") {
  const Series a = parse_series(kQ2, "sqrt(2)*x^1 + 1");
  const PrecSeries inv = series_inv(a, Rational(2));
  const Series err = ser_sub(ser_mul(a, inv.value),
                             Series::constant(kQ2, Scalar(Rational(1))));
  for (const SeriesTerm& t : err.terms()) {
    CHECK(t.exponent < valuation(a) + inv.guard);
  }
  CHECK(s_eq(leading_coeff(inv.value),
             s_inv(Scalar(Rational(0), Rational(1), 2))));
}

TEST_CASE("guarded arithmetic tracks the weakest guard") {
  const PrecSeries e = PrecSeries::exact(ser("x^1 + 1"));
  const PrecSeries t = PrecSeries::approx(ser("x^0 - x^-1"), Rational(-2));
  CHECK(!ps_add(e, e).truncated);
  const PrecSeries sum = ps_add(e, t);
  CHECK(sum.truncated);
  CHECK(sum.guard == Rational(-2));
  // Multiplication shifts guards by valuations.
  const PrecSeries prod = ps_mul(e, t);
  CHECK(prod.truncated);
  CHECK(prod.guard == Rational(-1));  // guard(t) + valuation(e)
  // Multiplying by exact zero erases the approximation entirely.
  const PrecSeries z = ps_mul(PrecSeries::exact(Series::zero(kQ)), t);
  CHECK(!z.truncated);
  CHECK(z.value.is_zero());
  // approx drops any term below its own guard.
  const PrecSeries clipped =
      PrecSeries::approx(ser("x^0 + x^-5"), Rational(-2));
  CHECK(format_series(clipped.value) == "1*x^0");
}

TEST_CASE("guarded comparison refuses undecidable verdicts") {
  const PrecSeries a = PrecSeries::approx(ser("x^1 + 1"), Rational(-1));
  const PrecSeries b = PrecSeries::approx(ser("x^1"), Rational(-1));
  // Difference has a kept nonzero lead at exponent 0 >= guard: decided.
  CHECK(ps_cmp(a, b) > 0);
  CHECK(ps_cmp(b, a) < 0);
  // Identical kept values with truncation: undecidable, and the error
  // code is precision_exceeded.
  try {
    ps_cmp(a, a);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precision_exceeded);
  }
  // Exact equal values compare fine.
  const PrecSeries e = PrecSeries::exact(ser("x^1"));
  CHECK(ps_cmp(e, e) == 0);
  // Monotone refinement: a verdict from coarse data survives refinement.
  const PrecSeries coarse = PrecSeries::approx(ser("x^1 + 1"), Rational(0));
  const PrecSeries fine =
      PrecSeries::approx(ser("x^1 + 1 - 1/2*x^-1"), Rational(-2));
  CHECK(ps_cmp(coarse, PrecSeries::exact(ser("x^1"))) > 0);
  CHECK(ps_cmp(fine, PrecSeries::exact(ser("x^1"))) > 0);
}

TEST_CASE("series parsing accepts the element syntax") {
  CHECK(ser_eq(ser("x"), ser("1*x^1")));
  CHECK(ser_eq(ser("x^1/2 + 1"), ser("1*x^(1/2) + 1*x^0")));
  CHECK(format_series(parse_series(kQ2, "(1+1*sqrt(2))*x^2")) ==
        "(1+1*sqrt(2))*x^2");
  CHECK_THROWS_AS(parse_series(kQ, "sqrt(2)*x^1"), Error);
  CHECK_THROWS_AS(parse_series(kQ, "x^^2"), Error);
  CHECK(parse_series(kQ, "0").is_zero());
}

TEST_CASE("sampled series are deterministic and respect the field") {
  Sampler a(42, 35, 7);
  Sampler b(42, 35, 7);
  const Series x = sample_series(kQ2, a, 4);
  const Series y = sample_series(kQ2, b, 4);
  CHECK(ser_eq(x, y));
  Sampler c(42, 35, 8);
  const Series nz = sample_nonzero_series(kQ, c, 4);
  CHECK(!nz.is_zero());
}

TEST_CASE("valuation compatibility report passes over both fields") {
  for (const Field& f : {kQ, kQ2}) {
    const ValuationReport rep = v_compat_check(f, 7, 60);
    CHECK(rep.all_pass);
    CHECK(rep.checks.size() == 3);
    for (const CheckResult& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
      CHECK(c.samples == 60);
    }
    CHECK(rep.header == series_report_header(f));
    CHECK(rep.header.find("not real closed") != std::string::npos);
  }
  // Determinism of the whole report.
  const ValuationReport r1 = v_compat_check(kQ, 9, 40);
  const ValuationReport r2 = v_compat_check(kQ, 9, 40);
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (size_t i = 0; i < r1.checks.size(); ++i) {
    CHECK(r1.checks[i].witnesses == r2.checks[i].witnesses);
  }
}
