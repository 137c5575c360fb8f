// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "tame.hpp"

#include <utility>

#include "errors.hpp"
#include "sampling.hpp"

namespace ogtame {

namespace {

constexpr uint64_t kTameOracleSeed = 0x7a3e5eedb0b57a11ULL;
constexpr int kTameOracleCases = 1000;

void require_ambient(const Subgroup& s, const GroupElement& b) {
  if (b.ctx() != s.ambient()) {
    fail(ErrorCode::context_mismatch,
         "element of " + b.ctx().to_string() + " against a subgroup of " +
             s.ambient().to_string());
  }
}

void require_divisible(const Subgroup& s) {
  if (s.ring() == Ring::z && !s.is_trivial()) {
    fail(ErrorCode::non_divisible_subgroup,
         "operation requires a divisible (Q-span) subgroup");
  }
}

int top_level_index(const Subgroup& s) {
  return s.window().level_of_slot(s.echelon().pivots.front());
}

int least_level_index(const Subgroup& s) {
  return s.window().level_of_slot(s.echelon().pivots.back());
}

}  // namespace

// Bounded sampler: support only at levels dominated by S's top level.
GroupElement sample_bounded(const Subgroup& s, Sampler& rng) {
  const GroupCtx& ctx = s.ambient();
  if (s.is_trivial()) return GroupElement::zero(ctx);
  if (ctx.kind == GroupCtx::Kind::lex) {
    int top = top_level_index(s);
    std::vector<Scalar> coords(static_cast<size_t>(ctx.dim),
                               Scalar(Rational(0), Rational(0),
                                      ctx.field.d()));
    for (int i = top; i < ctx.dim; ++i) {
      if (rng.chance(3, 4)) {
        coords[static_cast<size_t>(i)] = sample_scalar(ctx.field, rng);
      }
    }
    return GroupElement::lex(ctx, std::move(coords));
  }
  const std::vector<Rational>& window_exps = s.window().exponents();
  Rational top_exp = window_exps.front();
  std::vector<Rational> pool = window_exps;
  for (int k = 0; k < 3; ++k) {
    Rational drop = sample_rational(rng).abs() + Rational(1, 7);
    pool.push_back(top_exp - drop);
  }
  for (size_t i = 0; i + 1 < window_exps.size(); ++i) {
    pool.push_back((window_exps[i] + window_exps[i + 1]) / Rational(2));
  }
  TermList terms;
  for (auto& e : pool) {
    if (rng.chance(1, 2)) {
      Scalar c = sample_scalar(ctx.field, rng);
      if (!c.is_zero()) terms.push_back({e, c});
    }
  }
  return GroupElement::hahn(ctx, std::move(terms));
}

const char* st_case_name(StCase c) {
  switch (c) {
    case StCase::exact: return "Exact";
    case StCase::nearest_below: return "NearestBelow";
    case StCase::nearest_above: return "NearestAbove";
    case StCase::not_bounded: return "NotBounded";
    case StCase::no_nearest: return "NoNearest";
  }
  return "?";
}

bool InfinitesimalLevel::member(const GroupElement& g) const {
  if (g.is_zero()) return true;
  return more_significant(least_pivot, lead(g));
}

std::string InfinitesimalLevel::describe() const {
  return "{support strictly less significant than " +
         least_pivot.to_string() + "}";
}

InfinitesimalLevel infinitesimal_level(const Subgroup& s) {
  return InfinitesimalLevel{s.least_pivot_level()};
}

bool is_bounded(const Subgroup& s, const GroupElement& b) {
  require_ambient(s, b);
  if (s.is_trivial()) return b.is_zero();
  if (b.is_zero()) return true;
  return !more_significant(lead(b), s.top_level());
}

GroupElement positive_below(const Subgroup& s, const GroupElement& r) {
  require_ambient(s, r);
  if (r.is_zero()) {
    fail(ErrorCode::zero_element, "no positive element below 0");
  }
  if (s.is_trivial()) {
    fail(ErrorCode::zero_element,
         "trivial subgroup has no positive elements");
  }
  GroupElement mag = g_abs(r);
  Level lead_level = lead(mag);
  Level least = s.least_pivot_level();
  const GroupElement& row = s.basis().back();
  if (more_significant(lead_level, least)) {
    return row;
  }
  if (level_eq(lead_level, least)) {
    Scalar rho = lead_coeff(mag);
    Scalar sigma = lead_coeff(row);
    Scalar ratio = s_div(rho, sigma);
    Rational q(1);
    int guard = 0;
    while (s_cmp(Scalar(q, Rational(0), ratio.d), ratio) >= 0) {
      q /= Rational(2);
      if (++guard > 100000) {
        fail(ErrorCode::internal, "halving search failed to terminate");
      }
    }
    return g_scale(q, row);
  }
  fail(ErrorCode::internal,
       "element is infinitesimal relative to the subgroup");
}

StResult standard_part(const Subgroup& s, const GroupElement& b) {
  require_ambient(s, b);
  require_divisible(s);
  StResult out;
  if (s.is_trivial()) {
    if (b.is_zero()) {
      out.kind = StCase::exact;
      out.value = GroupElement::zero(s.ambient());
    } else {
      out.kind = StCase::not_bounded;
    }
    return out;
  }
  if (!is_bounded(s, b)) {
    out.kind = StCase::not_bounded;
    return out;
  }
  Window merged = s.window().merged(Window::for_elements(s.ambient(), {b}));
  Echelon wide =
      reexpand(s.echelon(), s.window().embedding(merged), merged.slots());
  int width = s.ambient().field.width();
  int least_idx = *merged.level_index(s.least_pivot_level());
  int slot_limit = (least_idx + 1) * width;
  RatVec bv = *merged.coords(b);
  PrefixSolve ps = solve_prefix(wide, bv, slot_limit);
  GroupElement delta = s.from_coords(ps.coeffs);
  if (ps.ok) {
    int c = g_cmp(b, delta);
    out.kind = c == 0 ? StCase::exact
                      : (c > 0 ? StCase::nearest_below : StCase::nearest_above);
    out.value = std::move(delta);
    return out;
  }
  out.kind = StCase::no_nearest;
  GroupElement residual = g_sub(b, delta);
  out.certificate = positive_below(s, residual);
  out.residual = std::move(residual);
  return out;
}

namespace {

// Bounded elements whose standard part must exist under a Tame verdict;
// used to cross-validate the structural decision.
void tame_cross_check(const Subgroup& s, const TameResult& verdict) {
  if (s.is_trivial()) return;
  if (!verdict.tame) {
    StResult r = standard_part(s, *verdict.witness);
    if (r.kind != StCase::no_nearest) {
      fail(ErrorCode::oracle_disagreement,
           "tameness witness " + format_element(*verdict.witness) +
               " has standard part case " + st_case_name(r.kind));
    }
    return;
  }
  for (int i = 0; i < kTameOracleCases; ++i) {
    Sampler rng(kTameOracleSeed, 2, static_cast<uint64_t>(i));
    GroupElement b = sample_bounded(s, rng);
    StResult r = standard_part(s, b);
    if (r.kind == StCase::no_nearest || r.kind == StCase::not_bounded) {
      fail(ErrorCode::oracle_disagreement,
           "structural Tame verdict contradicted by sample " +
               format_element(b) + " with case " + st_case_name(r.kind));
    }
  }
}

}  // namespace

TameResult decide_tame(const Subgroup& s) {
  require_divisible(s);
  TameResult out;
  if (s.is_trivial()) {
    out.tame = true;
    return out;
  }
  const Window& w = s.window();
  const Echelon& e = s.echelon();
  int width = s.ambient().field.width();
  int top_idx = top_level_index(s);
  int least_idx = least_level_index(s);

  if (s.ambient().kind == GroupCtx::Kind::hahn && top_idx != least_idx) {
    // Any exponent strictly between two adjacent window levels is
    // outside the echelon support and cannot be matched.
    Rational e_mid =
        (w.exponents()[static_cast<size_t>(top_idx)] +
         w.exponents()[static_cast<size_t>(top_idx + 1)]) /
        Rational(2);
    out.tame = false;
    out.witness = GroupElement::hahn(
        s.ambient(),
        {{e_mid, Scalar(Rational(1), Rational(0), s.ambient().field.d())}});
    tame_cross_check(s, out);
    return out;
  }

  std::vector<bool> pivoted(static_cast<size_t>(w.slots()), false);
  for (int p : e.pivots) pivoted[static_cast<size_t>(p)] = true;
  for (int slot = top_idx * width; slot < (least_idx + 1) * width; ++slot) {
    if (pivoted[static_cast<size_t>(slot)]) continue;
    RatVec unit(static_cast<size_t>(w.slots()), Rational(0));
    unit[static_cast<size_t>(slot)] = Rational(1);
    out.tame = false;
    out.witness = w.element(unit);
    tame_cross_check(s, out);
    return out;
  }
  out.tame = true;
  tame_cross_check(s, out);
  return out;
}

SectionCheck check_cross_section(const Morphism& f, const Subgroup& s) {
  if (s.ambient() != f.domain()) {
    fail(ErrorCode::context_mismatch,
         "subgroup of " + s.ambient().to_string() +
             " against a morphism on " + f.domain().to_string());
  }
  SectionCheck out;
  if (f.is_lex()) {
    const Subgroup& kernel = *f.kernel().span();
    RatMatrix joint = s.echelon().rows;
    joint.insert(joint.end(), kernel.echelon().rows.begin(),
                 kernel.echelon().rows.end());
    for (auto& row : joint) {
      row.resize(static_cast<size_t>(Window::full(f.domain()).slots()),
                 Rational(0));
    }
    if (mat_rank(joint) < s.dim() + kernel.dim()) {
      out.reason = "injectivity: S meets ker f in a nonzero subspace";
      return out;
    }
    Window tgt = Window::full(f.target());
    RatMatrix images;
    images.reserve(s.basis().size());
    for (auto& b : s.basis()) {
      images.push_back(*tgt.coords(f.apply(b)));
    }
    int rank = mat_rank(images);
    if (rank < tgt.slots()) {
      out.reason = "surjectivity: image rank " + std::to_string(rank) +
                   " is below the target dimension " +
                   std::to_string(tgt.slots()) + " over Q";
      return out;
    }
    if (s.ring() == Ring::z && !s.is_trivial()) {
      out.reason =
          "surjectivity: a Z-span image is a proper subgroup of the "
          "divisible target";
      return out;
    }
    out.yes = true;
    return out;
  }

  // Hahn ambient: S meets the kernel trivially iff the rows restricted
  // to the slots at exponents >= cut keep full rank.
  const Rational& cut = f.cut();
  int width = s.ambient().field.width();
  RatMatrix restricted;
  restricted.reserve(s.echelon().rows.size());
  for (auto& row : s.echelon().rows) {
    RatVec r;
    for (int l = 0; l < s.window().levels(); ++l) {
      if (s.window().exponents()[static_cast<size_t>(l)] >= cut) {
        for (int k = 0; k < width; ++k) {
          r.push_back(row[static_cast<size_t>(l * width + k)]);
        }
      }
    }
    restricted.push_back(std::move(r));
  }
  if (mat_rank(restricted) < s.dim()) {
    out.reason = "injectivity: S meets ker f in a nonzero subspace";
    return out;
  }
  out.reason =
      "surjectivity: a finitely generated span cannot cover the truncated "
      "hahn ambient";
  return out;
}

namespace {

void finish(CheckResult& r, const SampleStats& st) { finish_check(r, st); }

}  // namespace

std::vector<const CheckResult*> EquivalenceReport::checks() const {
  return {&a,        &b_divisible, &b_tame,  &b_cofinal,    &c_kernel,
          &d_sign,   &e_retract,   &e_idempotent, &e_additive, &e_order};
}

EquivalenceReport equivalence_report(const Morphism& f, const Subgroup& s,
                                     uint64_t seed, long cases) {
  if (s.ambient() != f.domain()) {
    fail(ErrorCode::context_mismatch,
         "subgroup of " + s.ambient().to_string() +
             " against a morphism on " + f.domain().to_string());
  }
  EquivalenceReport rep;
  const GroupCtx& ctx = f.domain();
  bool lex = ctx.kind == GroupCtx::Kind::lex;

  SectionCheck sc = check_cross_section(f, s);
  rep.a.name = "(a) f restricted to S is an isomorphism onto the target";
  rep.a.pass = sc.yes;
  rep.a.note = sc.yes ? "" : sc.reason;

  bool divisible = s.ring() == Ring::q || s.is_trivial();
  rep.b_divisible.name = "(b) S is divisible";
  rep.b_divisible.pass = divisible;
  rep.b_divisible.note =
      divisible ? "" : "declared as a Z-span with nonzero rank";

  rep.b_tame.name = "(b) S is tame in its convex hull";
  if (divisible) {
    TameResult tr = decide_tame(s);
    rep.b_tame.pass = tr.tame;
    if (!tr.tame) {
      rep.b_tame.note = "witness " + format_element(*tr.witness);
      rep.b_tame.witnesses.push_back(format_element(*tr.witness));
    }
  } else {
    rep.b_tame.evaluated = false;
    rep.b_tame.note = "skipped: requires a divisible span";
  }

  rep.b_cofinal.name = "(b) S is cofinal in the ambient";
  if (lex) {
    rep.b_cofinal.pass = !s.is_trivial() && s.top_level().index == 1;
    if (!rep.b_cofinal.pass) {
      rep.b_cofinal.note =
          s.is_trivial()
              ? "trivial span is not cofinal"
              : "top level is " + s.top_level().to_string() +
                    ", below the most significant coordinate";
    }
  } else {
    rep.b_cofinal.pass = false;
    rep.b_cofinal.note =
        "NotCofinal: finitely generated spans are never cofinal in a hahn "
        "ambient";
  }

  // (c) kernel identity: structural comparison plus sampled double
  // inclusion of ker f against the infinitesimal members.
  rep.c_kernel.name = "(c) ker f equals the elements with zero standard part";
  {
    bool structural;
    int width = ctx.field.width();
    if (lex) {
      const Subgroup& kernel = *f.kernel().span();
      if (s.is_trivial()) {
        structural = kernel.dim() == 0;
      } else {
        int least_idx = least_level_index(s);
        Window full = Window::full(ctx);
        RatMatrix expected;
        for (int slot = (least_idx + 1) * width; slot < full.slots();
             ++slot) {
          RatVec unit(static_cast<size_t>(full.slots()), Rational(0));
          unit[static_cast<size_t>(slot)] = Rational(1);
          expected.push_back(std::move(unit));
        }
        structural = kernel.echelon().rows == expected;
      }
    } else {
      if (s.is_trivial()) {
        structural = false;
      } else {
        Level least = s.least_pivot_level();
        structural = f.cut() == least.exponent;
      }
    }
    if (!structural) {
      rep.c_kernel.note = "structural mismatch between ker f and I(S)";
    }

    SampleStats stats;
    if (divisible) {
      for (long i = 0; i < cases; ++i) {
        Sampler rng(seed, 101, static_cast<uint64_t>(i));
        std::optional<GroupElement> member;
        if (lex) {
          const Subgroup& kernel = *f.kernel().span();
          if (kernel.dim() > 0) {
            RatVec kc;
            for (int r = 0; r < kernel.dim(); ++r) {
              kc.push_back(sample_rational(rng));
            }
            member = kernel.from_coords(kc);
          }
        } else {
          TermList terms;
          for (int k = 0; k < 3; ++k) {
            Rational e = f.cut() - sample_rational(rng).abs() - Rational(1, 5);
            Scalar c = sample_scalar(ctx.field, rng);
            if (!c.is_zero()) terms.push_back({e, c});
          }
          member = GroupElement::hahn(ctx, std::move(terms));
        }
        if (member.has_value()) {
          ++stats.total;
          StResult r = standard_part(s, *member);
          bool zero_st = (r.kind == StCase::exact ||
                          r.kind == StCase::nearest_below ||
                          r.kind == StCase::nearest_above) &&
                         r.value->is_zero();
          if (!zero_st) {
            stats.fail_case("ker member " + format_element(*member) +
                            " has st case " + st_case_name(r.kind));
          }
        }
        if (!s.is_trivial()) {
          ++stats.total;
          GroupElement inf = [&]() {
            if (lex) {
              int least_idx = least_level_index(s);
              std::vector<Scalar> coords(
                  static_cast<size_t>(ctx.dim),
                  Scalar(Rational(0), Rational(0), ctx.field.d()));
              for (int l = least_idx + 1; l < ctx.dim; ++l) {
                coords[static_cast<size_t>(l)] =
                    sample_scalar(ctx.field, rng);
              }
              return GroupElement::lex(ctx, std::move(coords));
            }
            Rational least_exp = s.least_pivot_level().exponent;
            TermList terms;
            for (int k = 0; k < 3; ++k) {
              Rational e =
                  least_exp - sample_rational(rng).abs() - Rational(1, 5);
              Scalar c = sample_scalar(ctx.field, rng);
              if (!c.is_zero()) terms.push_back({e, c});
            }
            return GroupElement::hahn(ctx, std::move(terms));
          }();
          if (!f.kernel().member(inf)) {
            stats.fail_case("infinitesimal " + format_element(inf) +
                            " is outside ker f");
          }
        }
      }
      finish(rep.c_kernel, stats);
      rep.c_kernel.pass = structural && stats.ok();
    } else {
      rep.c_kernel.evaluated = false;
      rep.c_kernel.note = "skipped: requires a divisible span";
    }
  }

  // (d) sign compatibility of f and st on bounded samples.
  rep.d_sign.name = "(d) f(g) >= 0 iff st(g) >= 0";
  if (divisible && !s.is_trivial()) {
    SampleStats stats;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, 103, static_cast<uint64_t>(i));
      GroupElement g = sample_bounded(s, rng);
      ++stats.total;
      StResult r = standard_part(s, g);
      if (!r.value.has_value()) {
        stats.fail_case("sample " + format_element(g) + " has st case " +
                        st_case_name(r.kind));
        continue;
      }
      bool f_nonneg = g_sign(f.apply(g)) >= 0;
      bool st_nonneg = g_sign(*r.value) >= 0;
      if (f_nonneg != st_nonneg) {
        stats.fail_case("sample " + format_element(g) + ": f sign " +
                        std::to_string(g_sign(f.apply(g))) + ", st sign " +
                        std::to_string(g_sign(*r.value)));
      }
    }
    finish(rep.d_sign, stats);
  } else if (!divisible) {
    rep.d_sign.evaluated = false;
    rep.d_sign.note = "skipped: requires a divisible span";
  } else {
    rep.d_sign.evaluated = false;
    rep.d_sign.note = "skipped: trivial span bounds only 0";
  }

  // (e) retract laws of the standard part map.
  auto sample_pair_check = [&](CheckResult& r, uint64_t stream,
                               auto&& check) {
    if (!divisible || s.is_trivial()) {
      r.evaluated = false;
      r.note = !divisible ? "skipped: requires a divisible span"
                          : "skipped: trivial span bounds only 0";
      return;
    }
    SampleStats stats;
    for (long i = 0; i < cases; ++i) {
      Sampler rng(seed, stream, static_cast<uint64_t>(i));
      ++stats.total;
      check(rng, stats);
    }
    finish(r, stats);
  };

  rep.e_retract.name = "(e) f(st(g)) = f(g)";
  sample_pair_check(rep.e_retract, 104, [&](Sampler& rng, SampleStats& st) {
    GroupElement g = sample_bounded(s, rng);
    StResult r = standard_part(s, g);
    if (!r.value.has_value()) {
      st.fail_case("sample " + format_element(g) + " has st case " +
                   st_case_name(r.kind));
      return;
    }
    if (!g_eq(f.apply(*r.value), f.apply(g))) {
      st.fail_case("sample " + format_element(g) + ": f(st) = " +
                   format_element(f.apply(*r.value)) + ", f = " +
                   format_element(f.apply(g)));
    }
  });

  rep.e_idempotent.name = "(e) st(st(g)) = st(g)";
  sample_pair_check(rep.e_idempotent, 105,
                    [&](Sampler& rng, SampleStats& st) {
    GroupElement g = sample_bounded(s, rng);
    StResult r = standard_part(s, g);
    if (!r.value.has_value()) {
      st.fail_case("sample " + format_element(g) + " has st case " +
                   st_case_name(r.kind));
      return;
    }
    StResult rr = standard_part(s, *r.value);
    if (rr.kind != StCase::exact || !g_eq(*rr.value, *r.value)) {
      st.fail_case("st not idempotent at " + format_element(g));
    }
  });

  rep.e_additive.name = "(e) st(g1 + g2) = st(g1) + st(g2)";
  sample_pair_check(rep.e_additive, 106, [&](Sampler& rng, SampleStats& st) {
    GroupElement g1 = sample_bounded(s, rng);
    GroupElement g2 = sample_bounded(s, rng);
    StResult r1 = standard_part(s, g1);
    StResult r2 = standard_part(s, g2);
    StResult r12 = standard_part(s, g_add(g1, g2));
    if (!r1.value.has_value() || !r2.value.has_value() ||
        !r12.value.has_value()) {
      st.fail_case("standard part undefined on an additivity sample");
      return;
    }
    if (!g_eq(*r12.value, g_add(*r1.value, *r2.value))) {
      st.fail_case("additivity fails at " + format_element(g1) + " and " +
                   format_element(g2));
    }
  });

  rep.e_order.name = "(e) g1 <= g2 implies st(g1) <= st(g2)";
  sample_pair_check(rep.e_order, 107, [&](Sampler& rng, SampleStats& st) {
    GroupElement g1 = sample_bounded(s, rng);
    GroupElement g2 = sample_bounded(s, rng);
    if (g_cmp(g1, g2) > 0) std::swap(g1, g2);
    StResult r1 = standard_part(s, g1);
    StResult r2 = standard_part(s, g2);
    if (!r1.value.has_value() || !r2.value.has_value()) {
      st.fail_case("standard part undefined on an order sample");
      return;
    }
    if (g_cmp(*r1.value, *r2.value) > 0) {
      st.fail_case("order preservation fails between " +
                   format_element(g1) + " and " + format_element(g2));
    }
  });

  bool b_all = rep.b_divisible.pass &&
               (rep.b_tame.evaluated ? rep.b_tame.pass : false) &&
               rep.b_cofinal.pass;
  if (!divisible) b_all = false;
  rep.side_a = rep.a.pass;
  rep.side_bc = b_all && (rep.c_kernel.evaluated ? rep.c_kernel.pass : false);
  rep.side_bd = b_all && (rep.d_sign.evaluated ? rep.d_sign.pass : false);
  if (!divisible) {
    rep.side_bc = false;
    rep.side_bd = false;
  }
  rep.verdict =
      rep.side_a == rep.side_bc && rep.side_bc == rep.side_bd;
  bool every = rep.verdict;
  for (const CheckResult* c : rep.checks()) {
    if (c->evaluated && !c->pass) every = false;
  }
  rep.all_pass = every;
  return rep;
}

}  // namespace ogtame
