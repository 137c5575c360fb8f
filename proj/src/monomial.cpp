// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "monomial.hpp"

#include <gmpxx.h>

#include <map>
#include <utility>

#include "errors.hpp"
#include "rng.hpp"

namespace ogtame {

namespace {

// Desk-scale factoring bound: trial division stays below 10^6 steps.
const mpz_class kFactorBound("1000000000000");

std::map<mpz_class, long> factor_positive(mpz_class n) {
  if (n <= 0) fail(ErrorCode::internal, "factoring a non-positive integer");
  if (n > kFactorBound) {
    fail(ErrorCode::unsupported_operation,
         "integer " + n.get_str() + " exceeds the exact factoring bound");
  }
  std::map<mpz_class, long> out;
  auto strip = [&](const mpz_class& f) {
    while (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) {
      n /= f;
      ++out[f];
    }
  };
  strip(2);
  strip(3);
  for (mpz_class f = 5; f * f <= n; f += 6) {
    strip(f);
    strip(f + 2);
  }
  if (n > 1) ++out[n];
  return out;
}

// Signed prime exponents of a positive rational.
std::map<mpz_class, long> factor_signed(const Rational& x) {
  auto out = factor_positive(x.num());
  for (const auto& [p, e] : factor_positive(x.den())) out[p] -= e;
  return out;
}

}  // namespace

MonomialGroup::MonomialGroup(Kind k, Field f, Rational base)
    : kind_(k), field_(std::move(f)), base_(std::move(base)) {}

MonomialGroup MonomialGroup::xq(const Field& field) {
  return MonomialGroup(Kind::xq, field, Rational(1));
}

MonomialGroup MonomialGroup::coeff_xq(const Field& field,
                                      const Rational& base) {
  if (base.sign() <= 0) {
    fail(ErrorCode::non_positive, "coefficient base must be positive");
  }
  if (base.is_one()) {
    fail(ErrorCode::schema_error,
         "coefficient base 1 collapses to the pure x^Q group");
  }
  return MonomialGroup(Kind::coeff_xq, field, base);
}

std::string MonomialGroup::describe() const {
  if (kind_ == Kind::xq) return "x^Q";
  return base_.to_string() + "^Q * x^Q";
}

MonoElt mono_one() { return MonoElt{Rational(0), Rational(0)}; }

MonoElt mono_mul(const MonoElt& a, const MonoElt& b) {
  return MonoElt{a.p + b.p, a.q + b.q};
}

MonoElt mono_inv(const MonoElt& a) { return MonoElt{-a.p, -a.q}; }

MonoElt mono_pow(const MonoElt& a, const Rational& k) {
  return MonoElt{a.p * k, a.q * k};
}

bool mono_elt_eq(const MonoElt& a, const MonoElt& b) {
  return a.p == b.p && a.q == b.q;
}

int mono_cmp(const MonomialGroup& g, const MonoElt& a, const MonoElt& b) {
  if (!(a.q == b.q)) return a.q < b.q ? -1 : 1;
  if (a.p == b.p) return 0;
  if (g.kind() == MonomialGroup::Kind::xq) {
    fail(ErrorCode::context_mismatch,
         "coefficient exponents are not part of the pure x^Q group");
  }
  const bool less = a.p < b.p;
  return (g.base() > Rational(1)) == less ? -1 : 1;
}

std::string format_mono(const MonomialGroup& g, const MonoElt& m) {
  std::string tail = "x^" + format_exponent(m.q);
  if (m.p.is_zero()) return tail;
  std::string base = g.base().to_string();
  if (!g.base().is_integer()) base = "(" + base + ")";
  return base + "^" + format_exponent(m.p) + "*" + tail;
}

namespace {

// Compare base^p against a positive scalar c by cross-powering:
// base^{a/b} vs c is decided by base^a vs c^b (b > 0).
int cmp_power_scalar(const MonomialGroup& g, const Rational& p,
                     const Scalar& c) {
  if (p.is_zero()) return s_cmp(Scalar(Rational(1)), c);
  mpz_class a = p.num();
  mpz_class b = p.den();
  if (!a.fits_slong_p() || !b.fits_slong_p()) {
    fail(ErrorCode::unsupported_operation,
         "coefficient exponent " + p.to_string() +
             " exceeds the exact cross-powering bound");
  }
  Rational lhs = Rational::pow(g.base(), a.get_si());
  Scalar rhs = s_pow_int(c, b.get_si());
  return s_cmp(Scalar(lhs), rhs);
}

}  // namespace

int cmp_mono_series(const MonomialGroup& g, const MonoElt& m,
                    const Series& s) {
  if (s.is_zero() || ser_sign(s) < 0) return 1;
  const Rational v = valuation(s);
  if (!(m.q == v)) return m.q < v ? -1 : 1;
  const Scalar c = leading_coeff(s);
  const int head = cmp_power_scalar(g, m.p, c);
  if (head != 0) return head;
  Series tail = ser_sub(s, Series::monomial(s.field(), c, v));
  return -ser_sign(tail);
}

std::optional<Rational> rational_log(const Rational& base,
                                     const Rational& value) {
  if (base.sign() <= 0 || value.sign() <= 0) {
    fail(ErrorCode::non_positive, "rational_log needs positive arguments");
  }
  if (base.is_one()) {
    fail(ErrorCode::schema_error, "rational_log base must differ from 1");
  }
  auto fb = factor_signed(base);
  auto fv = factor_signed(value);
  long e0 = 0;
  mpz_class p0;
  for (const auto& [pr, e] : fb) {
    if (e != 0) {
      p0 = pr;
      e0 = e;
      break;
    }
  }
  if (e0 == 0) fail(ErrorCode::internal, "base 1 escaped validation");
  const long v0 = fv.count(p0) ? fv[p0] : 0;
  const Rational p(v0, e0);
  auto matches = [&](const mpz_class& pr) {
    const long be = fb.count(pr) ? fb[pr] : 0;
    const long ve = fv.count(pr) ? fv[pr] : 0;
    return Rational(ve) == p * Rational(be);
  };
  for (const auto& kv : fb) {
    if (!matches(kv.first)) return std::nullopt;
  }
  for (const auto& kv : fv) {
    if (!matches(kv.first)) return std::nullopt;
  }
  return p;
}

MonoSt st_positive(const MonomialGroup& g, const Series& r) {
  if (!(g.field() == r.field())) {
    fail(ErrorCode::field_mismatch,
         "series field does not match the monomial group's field");
  }
  if (ser_sign(r) <= 0) {
    fail(ErrorCode::non_positive,
         "standard part on the positive cone requires a positive series");
  }
  const Rational v = valuation(r);
  const Scalar c = leading_coeff(r);

  auto classify = [&](MonoElt m) {
    MonoSt out;
    const int cmp = cmp_mono_series(g, m, r);
    out.kind = cmp == 0 ? StCase::exact
                        : (cmp < 0 ? StCase::nearest_below
                                   : StCase::nearest_above);
    out.value = std::move(m);
    return out;
  };

  if (g.kind() == MonomialGroup::Kind::xq) {
    return classify(MonoElt{Rational(0), v});
  }

  std::optional<Rational> p;
  if (c.b.is_zero()) {
    p = rational_log(g.base(), c.a);
  } else if (c.a.is_zero()) {
    // c = w*sqrt(d) > 0, so base^p = c iff base^{2p} = c^2, which is
    // rational; equal squares of positive reals give equality.
    const Scalar c2 = s_mul(c, c);
    if (auto p2 = rational_log(g.base(), c2.a)) p = *p2 / Rational(2);
  } else {
    // A mixed u + w*sqrt(d) with u, w nonzero cannot be a rational
    // power of a rational base: c^b rational forces the conjugate of
    // c to be c or -c, i.e. w = 0 or u = 0.
    p = std::nullopt;
  }
  if (p.has_value()) return classify(MonoElt{*p, v});

  // Certified gap: bracket c strictly between consecutive integer
  // powers of the base and report the multiplicative residual.
  const Rational beta = g.base();
  const bool up = beta > Rational(1);
  const Rational big = up ? beta : beta.reciprocal();
  const Rational big_inv = big.reciprocal();
  Scalar rho = c;
  mpz_class t = 0;
  const Scalar one{Rational(1)};
  const Scalar big_s{big};
  for (long guard = 0;; ++guard) {
    if (guard > 100000) {
      fail(ErrorCode::budget_exhausted, "power bracketing exceeded its budget");
    }
    if (s_cmp(rho, one) <= 0) {
      rho = s_scale(big, rho);
      --t;
      continue;
    }
    if (s_cmp(rho, big_s) >= 0) {
      rho = s_scale(big_inv, rho);
      ++t;
      continue;
    }
    break;
  }
  MonoSt out;
  out.kind = StCase::no_nearest;
  out.residual = rho;
  out.bracket = up ? Rational(t) : Rational(mpz_class(-t));
  out.note = "no rational p solves " + beta.to_string() +
             "^p = " + format_scalar(c) + "; the residual " +
             format_scalar(rho) + " lies strictly between 1 and " +
             big.to_string();
  return out;
}

MonoElt mono_positive_below(const MonomialGroup& g, const Scalar& rho) {
  if (g.kind() == MonomialGroup::Kind::xq) {
    fail(ErrorCode::unsupported_operation,
         "the pure x^Q group has no element strictly between 1 and a "
         "constant");
  }
  const Scalar one{Rational(1)};
  if (s_cmp(rho, one) <= 0) {
    fail(ErrorCode::non_positive,
         "a multiplicative certificate needs a residual above 1");
  }
  const Rational beta = g.base();
  const bool up = beta > Rational(1);
  const Rational big = up ? beta : beta.reciprocal();
  const Scalar big_s{big};
  Scalar acc = rho;
  long n = 1;
  while (s_cmp(acc, big_s) < 0) {
    acc = s_mul(acc, rho);
    if (++n > 100000) {
      fail(ErrorCode::budget_exhausted,
           "certificate root search exceeded its budget");
    }
  }
  // Now rho^n >= max(base, 1/base), hence base^{+-1/n} <= rho.
  return MonoElt{up ? Rational(1, n) : Rational(-1, n), Rational(0)};
}

bool in_valuation_ring(const Series& a) {
  return a.is_zero() || !(Rational(0) < valuation(a));
}

Scalar residue(const Series& a) {
  if (a.is_zero()) return Scalar(Rational(0), Rational(0), a.field().d());
  if (Rational(0) < valuation(a)) {
    fail(ErrorCode::not_in_valuation_ring,
         "leading exponent " + valuation(a).to_string() +
             " is positive, so st(|a|) exceeds 1");
  }
  return a.coeff_at(Rational(0));
}

namespace {

// Standard-part value, or nullopt when the verdict is a certified gap.
std::optional<MonoElt> st_value(const MonomialGroup& g, const Series& r) {
  MonoSt st = st_positive(g, r);
  return st.value;
}

}  // namespace

ValuationReport induced_valuation_check(const MonomialGroup& g, uint64_t seed,
                                        long cases) {
  const Field& field = g.field();
  ValuationReport rep;
  rep.header = series_report_header(field);
  if (g.kind() == MonomialGroup::Kind::coeff_xq) {
    rep.header +=
        "; group " + g.describe() +
        " has certified coefficient gaps, so these results are informational";
  }

  {
    CheckResult c;
    c.name = "st(2) <= 1";
    c.samples = 1;
    const Series two = Series::constant(field, Scalar(Rational(2)));
    MonoSt st = st_positive(g, two);
    if (!st.value.has_value()) {
      c.pass = false;
      c.witnesses.push_back("st(2) has no nearest element: " + st.note);
    } else {
      const int cmp = mono_cmp(g, *st.value, mono_one());
      c.pass = cmp <= 0;
      if (cmp == 0) c.note = "holds with equality: st(2) = x^0 = 1";
      if (!c.pass) {
        c.witnesses.push_back("st(2) = " + format_mono(g, *st.value));
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c;
    c.name = "st(|a+b|) <= max(st(|a|), st(|b|)) for a != -b";
    SampleStats st;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 22, static_cast<uint64_t>(i));
      Series a = sample_nonzero_series(field, rng, 4);
      Series b = sample_nonzero_series(field, rng, 4);
      ++st.total;
      if (ser_eq(a, ser_neg(b))) {
        ++st.guarded;
        continue;
      }
      auto sa = st_value(g, ser_abs(a));
      auto sb = st_value(g, ser_abs(b));
      auto ss = st_value(g, ser_abs(ser_add(a, b)));
      if (!sa || !sb || !ss) {
        st.fail_case("st undefined at a = " + format_series(a) +
                     ", b = " + format_series(b));
        continue;
      }
      const MonoElt& top = mono_cmp(g, *sa, *sb) >= 0 ? *sa : *sb;
      if (mono_cmp(g, *ss, top) > 0) {
        st.fail_case("a = " + format_series(a) + ", b = " + format_series(b));
      }
    }
    finish_check(c, st);
    if (st.guarded > 0) {
      c.note = "pairs with a = -b are excluded by the proviso";
    }
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c;
    c.name = "st(r*s) = st(r)*st(s) on the positive cone";
    SampleStats st;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 23, static_cast<uint64_t>(i));
      Series r = ser_abs(sample_nonzero_series(field, rng, 4));
      Series s = ser_abs(sample_nonzero_series(field, rng, 4));
      ++st.total;
      auto sr = st_value(g, r);
      auto ss = st_value(g, s);
      auto sp = st_value(g, ser_mul(r, s));
      if (!sr || !ss || !sp) {
        st.fail_case("st undefined at r = " + format_series(r) +
                     ", s = " + format_series(s));
        continue;
      }
      if (!mono_elt_eq(*sp, mono_mul(*sr, *ss))) {
        st.fail_case("r = " + format_series(r) + ", s = " + format_series(s));
      }
    }
    finish_check(c, st);
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c;
    c.name = "0 < a < b implies st(a) <= st(b)";
    SampleStats st;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 24, static_cast<uint64_t>(i));
      Series a = ser_abs(sample_nonzero_series(field, rng, 4));
      Series b = ser_abs(sample_nonzero_series(field, rng, 4));
      ++st.total;
      if (ser_eq(a, b)) {
        ++st.guarded;
        continue;
      }
      if (ser_cmp(a, b) > 0) std::swap(a, b);
      auto sa = st_value(g, a);
      auto sb = st_value(g, b);
      if (!sa || !sb) {
        st.fail_case("st undefined at a = " + format_series(a) +
                     ", b = " + format_series(b));
        continue;
      }
      if (mono_cmp(g, *sa, *sb) > 0) {
        st.fail_case("a = " + format_series(a) + ", b = " + format_series(b));
      }
    }
    finish_check(c, st);
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c;
    c.name = "value-group agreement: st(|a|) = x^{v(a)}";
    SampleStats st;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 25, static_cast<uint64_t>(i));
      Series a = sample_nonzero_series(field, rng, 4);
      ++st.total;
      auto sa = st_value(g, ser_abs(a));
      if (!sa) {
        st.fail_case("st undefined at a = " + format_series(a));
        continue;
      }
      if (!mono_elt_eq(*sa, MonoElt{Rational(0), valuation(a)})) {
        st.fail_case("a = " + format_series(a) +
                     ", st(|a|) = " + format_mono(g, *sa));
      }
    }
    finish_check(c, st);
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c;
    c.name = "ring identity: st(|a|) <= 1 iff the leading exponent is <= 0";
    SampleStats st;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 26, static_cast<uint64_t>(i));
      Series a = sample_nonzero_series(field, rng, 4);
      ++st.total;
      auto sa = st_value(g, ser_abs(a));
      if (!sa) {
        st.fail_case("st undefined at a = " + format_series(a));
        continue;
      }
      const bool by_st = mono_cmp(g, *sa, mono_one()) <= 0;
      if (by_st != in_valuation_ring(a)) {
        st.fail_case("a = " + format_series(a) +
                     ", st(|a|) = " + format_mono(g, *sa));
      }
    }
    finish_check(c, st);
    rep.checks.push_back(std::move(c));
  }

  {
    CheckResult c;
    c.name = "kernel identity: v(r) = 0 iff st(r) = 1 for r > 0";
    SampleStats st;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 27, static_cast<uint64_t>(i));
      Series r = ser_abs(sample_nonzero_series(field, rng, 4));
      ++st.total;
      auto sr = st_value(g, r);
      if (!sr) {
        st.fail_case("st undefined at r = " + format_series(r));
        continue;
      }
      const bool v_zero = valuation(r).is_zero();
      const bool st_one = mono_cmp(g, *sr, mono_one()) == 0;
      if (v_zero != st_one) {
        st.fail_case("r = " + format_series(r) +
                     ", st(r) = " + format_mono(g, *sr));
      }
    }
    finish_check(c, st);
    rep.checks.push_back(std::move(c));
  }

  rep.all_pass = true;
  for (const auto& c : rep.checks) {
    if (c.evaluated && !c.pass) rep.all_pass = false;
  }
  return rep;
}

}  // namespace ogtame
