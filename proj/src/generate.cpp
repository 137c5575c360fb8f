// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "generate.hpp"

#include <algorithm>
#include <utility>

#include "errors.hpp"
#include "rng.hpp"
#include "sampling.hpp"

namespace ogtame {

namespace {

constexpr long kRetryBound = 10000;

// Stream tags keep the generator kinds independent of each other.
enum : uint64_t {
  kScalarStream = 31,
  kElementStream = 32,
  kSubgroupStream = 33,
  kMorphismStream = 34,
  kSeriesStream = 35,
  kGraphStream = 36,
  kBoundedStream = 37,
};

int support_bound(const GenConfig& cfg) {
  return std::max(1, std::min(5, cfg.size));
}

GroupElement element_from(const GroupCtx& ctx, Sampler& rng, int size) {
  if (ctx.kind == GroupCtx::Kind::lex) {
    std::vector<Scalar> coords;
    coords.reserve(static_cast<size_t>(ctx.dim));
    for (int i = 0; i < ctx.dim; ++i) {
      if (rng.chance(4, 5)) {
        coords.push_back(sample_scalar(ctx.field, rng, size, size));
      } else {
        coords.push_back(Scalar(Rational(0), Rational(0), ctx.field.d()));
      }
    }
    return GroupElement::lex(ctx, std::move(coords));
  }
  TermList terms;
  const int count = rng.int_in(0, std::max(1, std::min(5, size)));
  for (int i = 0; i < count; ++i) {
    Rational e = sample_rational(rng, size, 3);
    Scalar c = sample_scalar(ctx.field, rng, size, size);
    if (!c.is_zero()) terms.push_back({std::move(e), std::move(c)});
  }
  return GroupElement::hahn(ctx, std::move(terms));
}

Scalar positive_scalar(const Field& field, Sampler& rng, int size) {
  Scalar c = sample_scalar(field, rng, size, size);
  if (c.is_zero()) c = Scalar(Rational(1));
  if (s_sign(c) < 0) c = s_neg(c);
  return in_field(field, c);
}

// Block lower-triangular in significance order with each diagonal
// block acting as multiplication by a positive scalar: order
// preserving in both directions by construction.
RatMatrix structured_shear(const GroupCtx& ctx, Sampler& rng, int size) {
  const int w = ctx.field.width();
  const int n = ctx.dim * w;
  RatMatrix m(static_cast<size_t>(n),
              std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  for (int b = 0; b < ctx.dim; ++b) {
    const Scalar c = positive_scalar(ctx.field, rng, size);
    const int o = b * w;
    if (w == 1) {
      m[o][o] = c.a;
    } else {
      const Rational d(static_cast<long>(ctx.field.d()));
      m[o][o] = c.a;
      m[o][o + 1] = c.b * d;
      m[o + 1][o] = c.b;
      m[o + 1][o + 1] = c.a;
    }
    for (int rb = b + 1; rb < ctx.dim; ++rb) {
      for (int i = 0; i < w; ++i) {
        for (int j = 0; j < w; ++j) {
          if (rng.chance(1, 2)) {
            m[static_cast<size_t>(rb * w + i)][static_cast<size_t>(o + j)] =
                sample_rational(rng, size, 3);
          }
        }
      }
    }
  }
  return m;
}

RatMatrix wild_shear(const GroupCtx& ctx, Sampler& rng, int size) {
  const int n = ctx.dim * ctx.field.width();
  RatMatrix m(static_cast<size_t>(n),
              std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  for (auto& row : m) {
    for (auto& cell : row) {
      if (rng.chance(2, 3)) cell = sample_rational(rng, size, 3);
    }
  }
  return m;
}

}  // namespace

Scalar gen_scalar(const Field& field, const GenConfig& cfg, uint64_t index) {
  Sampler rng(cfg.seed, kScalarStream, index);
  return sample_scalar(field, rng, cfg.size, cfg.size);
}

GroupElement gen_element(const GroupCtx& ctx, const GenConfig& cfg,
                         uint64_t index) {
  Sampler rng(cfg.seed, kElementStream, index);
  return element_from(ctx, rng, cfg.size);
}

Subgroup gen_subgroup(const GroupCtx& ctx, Ring ring, const GenConfig& cfg,
                      uint64_t index) {
  Sampler rng(cfg.seed, kSubgroupStream, index);
  const int count = rng.int_in(1, std::max(1, std::min(3, cfg.size)));
  std::vector<GroupElement> gens;
  gens.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    gens.push_back(element_from(ctx, rng, cfg.size));
  }
  return Subgroup(ctx, std::move(gens), ring);
}

Series gen_series(const Field& field, const GenConfig& cfg, uint64_t index) {
  Sampler rng(cfg.seed, kSeriesStream, index);
  return sample_series(field, rng, support_bound(cfg));
}

Morphism gen_morphism(const GroupCtx& ctx, const GenConfig& cfg,
                      uint64_t index) {
  Sampler rng(cfg.seed, kMorphismStream, index);
  if (ctx.kind == GroupCtx::Kind::hahn) {
    Rational cut = sample_rational(rng, cfg.size, 3);
    return Morphism::make(ctx, {MorphismStage::hahn_truncate(cut)});
  }
  for (long tries = 0; tries < kRetryBound; ++tries) {
    int mode = static_cast<int>(rng.below(3));
    if (ctx.dim == 1) mode = 0;
    std::vector<MorphismStage> stages;
    if (mode == 0 || mode == 2) {
      const bool wild = rng.chance(1, 4);
      RatMatrix m = wild ? wild_shear(ctx, rng, cfg.size)
                         : structured_shear(ctx, rng, cfg.size);
      stages.push_back(MorphismStage::make_shear(std::move(m)));
    }
    if (mode == 1 || mode == 2) {
      stages.push_back(MorphismStage::projection(rng.int_in(1, ctx.dim - 1)));
    }
    try {
      return Morphism::make(ctx, std::move(stages));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::schema_error) throw;
    }
  }
  fail(ErrorCode::budget_exhausted,
       "no order-preserving morphism found within the retry bound");
}

Subgroup gen_graph_section(const Morphism& f, const GenConfig& cfg,
                           uint64_t index) {
  Sampler rng(cfg.seed, kGraphStream, index);
  const int kdim = f.kernel().dim();
  const int slots = f.target().dim * f.target().field.width();
  RatMatrix t(static_cast<size_t>(kdim),
              std::vector<Rational>(static_cast<size_t>(slots), Rational(0)));
  for (auto& row : t) {
    for (auto& cell : row) {
      if (rng.chance(2, 3)) cell = sample_rational(rng, cfg.size, 3);
    }
  }
  return section_subgroup(f, t);
}

GroupElement gen_element_bounded(const Subgroup& s, const GenConfig& cfg,
                                 uint64_t index) {
  Sampler rng(cfg.seed, kBoundedStream, index);
  return sample_bounded(s, rng);
}

namespace {

unsigned long z_complexity(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) + (z < 0 ? 1UL : 0UL);
}

template <typename T, typename MoveFn>
T drive(T value, const std::function<bool(const T&)>& fails, MoveFn moves) {
  for (int round = 0; round < 10000; ++round) {
    bool progress = false;
    for (const T& cand : moves(value)) {
      if (complexity(cand) < complexity(value) && fails(cand)) {
        value = cand;
        progress = true;
        break;
      }
    }
    if (!progress) break;
  }
  return value;
}

std::vector<Rational> rational_moves(const Rational& q) {
  std::vector<Rational> out;
  if (!q.is_zero()) out.push_back(Rational(0));
  if (!q.is_one()) out.push_back(Rational(1));
  if (q.sign() < 0) out.push_back(-q);
  const mpz_class n = q.num();
  const mpz_class d = q.den();
  if (n != 0) {
    out.push_back(Rational(mpz_class(n / 2), d));
    out.push_back(Rational(mpz_class(n - sgn(n)), d));
  }
  if (d > 1) {
    out.push_back(Rational(n, mpz_class(d / 2)));
    out.push_back(Rational(n, mpz_class(d - 1)));
  }
  return out;
}

std::vector<Scalar> scalar_moves(const Scalar& s) {
  std::vector<Scalar> out;
  if (!s.is_zero()) out.push_back(Scalar(Rational(0), Rational(0), s.d));
  if (!s.b.is_zero()) out.push_back(Scalar(s.a, Rational(0), s.d));
  if (!s.a.is_zero() && !s.b.is_zero()) {
    out.push_back(Scalar(Rational(0), s.b, s.d));
  }
  for (const Rational& a : rational_moves(s.a)) {
    out.push_back(Scalar(a, s.b, s.d));
  }
  if (s.d != 0) {
    for (const Rational& b : rational_moves(s.b)) {
      out.push_back(Scalar(s.a, b, s.d));
    }
  }
  return out;
}

std::vector<TermList> term_moves(const TermList& terms) {
  std::vector<TermList> out;
  for (size_t i = 0; i < terms.size(); ++i) {
    TermList dropped = terms;
    dropped.erase(dropped.begin() + static_cast<long>(i));
    out.push_back(std::move(dropped));
    for (const Scalar& c : scalar_moves(terms[i].coeff)) {
      TermList t = terms;
      t[i].coeff = c;
      out.push_back(std::move(t));
    }
    for (const Rational& e : rational_moves(terms[i].exponent)) {
      TermList t = terms;
      t[i].exponent = e;
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<GroupElement> element_moves(const GroupElement& g) {
  std::vector<GroupElement> out;
  if (g.ctx().kind == GroupCtx::Kind::lex) {
    for (size_t i = 0; i < g.coords().size(); ++i) {
      for (const Scalar& c : scalar_moves(g.coords()[i])) {
        std::vector<Scalar> coords = g.coords();
        coords[i] = c;
        out.push_back(GroupElement::lex(g.ctx(), std::move(coords)));
      }
    }
    return out;
  }
  for (TermList& t : term_moves(g.terms())) {
    out.push_back(GroupElement::hahn(g.ctx(), std::move(t)));
  }
  return out;
}

}  // namespace

unsigned long complexity(const Rational& q) {
  return z_complexity(q.num()) + z_complexity(q.den());
}

unsigned long complexity(const Scalar& s) {
  return complexity(s.a) + complexity(s.b);
}

unsigned long complexity(const GroupElement& g) {
  unsigned long total = 0;
  if (g.ctx().kind == GroupCtx::Kind::lex) {
    for (const Scalar& c : g.coords()) total += complexity(c);
    return total;
  }
  for (const SeriesTerm& t : g.terms()) {
    total += 1 + complexity(t.coeff) + complexity(t.exponent);
  }
  return total;
}

unsigned long complexity(const Series& s) {
  unsigned long total = 0;
  for (const SeriesTerm& t : s.terms()) {
    total += 1 + complexity(t.coeff) + complexity(t.exponent);
  }
  return total;
}

unsigned long complexity(const Subgroup& s) {
  unsigned long total = 0;
  for (const GroupElement& g : s.generators()) {
    total += 1 + complexity(g);
  }
  return total;
}

Rational shrink_rational(const Rational& value,
                         const std::function<bool(const Rational&)>& fails) {
  return drive(value, fails, rational_moves);
}

Scalar shrink_scalar(const Scalar& value,
                     const std::function<bool(const Scalar&)>& fails) {
  return drive(value, fails, scalar_moves);
}

GroupElement shrink_element(
    const GroupElement& value,
    const std::function<bool(const GroupElement&)>& fails) {
  return drive(value, fails, element_moves);
}

Series shrink_series(const Series& value,
                     const std::function<bool(const Series&)>& fails) {
  return drive(value, fails, [](const Series& s) {
    std::vector<Series> out;
    for (TermList& t : term_moves(s.terms())) {
      out.push_back(Series(s.field(), std::move(t)));
    }
    return out;
  });
}

Subgroup shrink_subgroup(const Subgroup& value,
                         const std::function<bool(const Subgroup&)>& fails) {
  return drive(value, fails, [](const Subgroup& s) {
    std::vector<Subgroup> out;
    const std::vector<GroupElement>& gens = s.generators();
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<GroupElement> dropped = gens;
      dropped.erase(dropped.begin() + static_cast<long>(i));
      out.push_back(Subgroup(s.ambient(), std::move(dropped), s.ring()));
      for (GroupElement& g : element_moves(gens[i])) {
        std::vector<GroupElement> swapped = gens;
        swapped[i] = std::move(g);
        out.push_back(Subgroup(s.ambient(), std::move(swapped), s.ring()));
      }
    }
    return out;
  });
}

}  // namespace ogtame
