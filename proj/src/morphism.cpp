// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "morphism.hpp"

#include <utility>

#include "errors.hpp"
#include "sampling.hpp"

namespace ogtame {

namespace {

constexpr uint64_t kOrderOracleSeed = 0x0c0ffee12d1af679ULL;
constexpr int kOrderOracleSamples = 10000;

// Scalar sitting at a given target level of a slot vector.
Scalar level_scalar(const RatVec& v, int level, int width, unsigned long d) {
  Rational a = v[static_cast<size_t>(level * width)];
  Rational b =
      width == 2 ? v[static_cast<size_t>(level * width + 1)] : Rational(0);
  return Scalar(a, b, d);
}

// Image of the scalar s placed at domain level j, as a slot vector.
RatVec block_apply(const RatMatrix& m, int j, int width, const Scalar& s) {
  size_t rows = m.size();
  RatVec out(rows, Rational(0));
  for (size_t r = 0; r < rows; ++r) {
    out[r] = s.a * m[r][static_cast<size_t>(j * width)];
    if (width == 2) {
      out[r] += s.b * m[r][static_cast<size_t>(j * width + 1)];
    }
  }
  return out;
}

bool block_is_zero(const RatMatrix& m, int j, int width) {
  for (auto& row : m) {
    for (int k = 0; k < width; ++k) {
      if (!row[static_cast<size_t>(j * width + k)].is_zero()) return false;
    }
  }
  return true;
}

// Most significant target level with a nonzero entry in block j; the
// block must be nonzero.
int block_lead_level(const RatMatrix& m, int j, int width) {
  for (size_t r = 0; r < m.size(); ++r) {
    for (int k = 0; k < width; ++k) {
      if (!m[r][static_cast<size_t>(j * width + k)].is_zero()) {
        return static_cast<int>(r) / width;
      }
    }
  }
  fail(ErrorCode::internal, "lead level of a zero block");
}

GroupElement unit_at(const Window& w, int level, const Scalar& s) {
  RatVec v(static_cast<size_t>(w.slots()), Rational(0));
  int width = w.ctx().field.width();
  v[static_cast<size_t>(level * width)] = s.a;
  if (width == 2) v[static_cast<size_t>(level * width + 1)] = s.b;
  return w.element(v);
}

// Picks a unit scalar (1 or sqrt(d)) whose image under block j is
// nonzero, together with the image's sign.
struct UnitProbe {
  Scalar unit;
  int sign = 0;
};

UnitProbe probe_block(const RatMatrix& m, int j, int width, unsigned long d,
                      const Window& target_window) {
  UnitProbe out;
  for (int k = 0; k < width; ++k) {
    Scalar s = k == 0 ? Scalar(Rational(1), Rational(0), d)
                      : Scalar(Rational(0), Rational(1), d);
    RatVec img = block_apply(m, j, width, s);
    GroupElement e = target_window.element(img);
    int sign = g_sign(e);
    if (sign != 0) {
      out.unit = s;
      out.sign = sign;
      return out;
    }
  }
  fail(ErrorCode::internal, "probe of a zero block");
}

// Picks a unit scalar whose image under block j is nonzero at the given
// target level, with the sign of that level's value.
UnitProbe probe_block_level(const RatMatrix& m, int j, int width,
                            unsigned long d, int level) {
  UnitProbe out;
  for (int k = 0; k < width; ++k) {
    Scalar s = k == 0 ? Scalar(Rational(1), Rational(0), d)
                      : Scalar(Rational(0), Rational(1), d);
    RatVec img = block_apply(m, j, width, s);
    Scalar at_level = level_scalar(img, level, width, d);
    int sign = s_sign(at_level);
    if (sign != 0) {
      out.unit = s;
      out.sign = sign;
      return out;
    }
  }
  fail(ErrorCode::internal, "probe of a block zero at its lead level");
}

// Rational multiplier kappa with kappa * p > v0 for positive p.
Rational rational_dominating(const Scalar& p, const Scalar& v0) {
  Rational kappa(1);
  int guard = 0;
  while (s_cmp(s_scale(kappa, p), v0) <= 0) {
    kappa *= Rational(2);
    if (++guard > 100000) {
      fail(ErrorCode::internal, "doubling search failed to terminate");
    }
  }
  return kappa;
}

// For a leading 2x2 block that is not multiplication by a positive
// field element, produces a positive scalar with a negative image under
// s -> a*v1 + b*v2.
Scalar refute_block(const Scalar& v1, const Scalar& v2, unsigned long d) {
  auto value = [&](const Scalar& s) {
    return s_add(s_scale(s.a, v1), s_scale(s.b, v2));
  };
  Scalar one(Rational(1), Rational(0), d);
  Scalar root(Rational(0), Rational(1), d);
  if (!v1.is_zero() && s_sign(value(one)) < 0) return one;
  if (!v2.is_zero() && s_sign(value(root)) < 0) return root;

  // Remaining case: v1, v2 >= 0 but v2 != sqrt(d)*v1. Candidates
  // sqrt(d) - r (r below sqrt(d)) and r - sqrt(d) (r above) converge to
  // 0 from the positive side while their images converge to
  // +-(v2 - sqrt(d)*v1); bisection on r makes the image sign exact.
  mpz_class dz(d);
  mpz_class root_floor;
  mpz_sqrt(root_floor.get_mpz_t(), dz.get_mpz_t());
  Rational lo{Rational(root_floor)};
  Rational hi = lo + Rational(1);
  Scalar delta = s_sub(v2, s_mul(root, v1));
  bool want_below = s_sign(delta) < 0;
  int guard = 0;
  while (true) {
    Scalar candidate = want_below
                           ? Scalar(-lo, Rational(1), d)   // sqrt(d) - lo
                           : Scalar(hi, Rational(-1), d);  // hi - sqrt(d)
    if (s_sign(candidate) > 0 && s_sign(value(candidate)) < 0) {
      return candidate;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (mid * mid < Rational(static_cast<long>(d))) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (++guard > 100000) {
      fail(ErrorCode::internal, "block refutation failed to terminate");
    }
  }
}

struct Structural {
  bool preserving = false;
  std::optional<GroupElement> witness;
};

Structural structural_order_check(const GroupCtx& domain,
                                  const GroupCtx& target,
                                  const RatMatrix& m) {
  int width = domain.field.width();
  unsigned long d = domain.field.d();
  int n = domain.dim;
  Window dom_window = Window::full(domain);
  Window tgt_window = Window::full(target);
  Structural out;

  std::vector<int> nz;
  std::optional<int> first_zero;
  for (int j = 0; j < n; ++j) {
    if (block_is_zero(m, j, width)) {
      if (!first_zero.has_value()) first_zero = j;
      continue;
    }
    if (first_zero.has_value()) {
      // A significant direction collapses while a less significant one
      // survives; overshooting the surviving direction flips the image.
      UnitProbe probe = probe_block(m, j, width, d, tgt_window);
      Scalar s = s_scale(Rational(-probe.sign), probe.unit);
      GroupElement witness =
          g_add(unit_at(dom_window, *first_zero,
                        Scalar(Rational(1), Rational(0), d)),
                unit_at(dom_window, j, s));
      out.witness = witness;
      return out;
    }
    nz.push_back(j);
  }

  int prev_lead = -1;
  for (size_t i = 0; i < nz.size(); ++i) {
    int j = nz[i];
    int t = block_lead_level(m, j, width);
    if (i > 0 && t <= prev_lead) {
      int jprev = nz[i - 1];
      UnitProbe probe = probe_block_level(m, j, width, d, t);
      RatVec img = block_apply(m, j, width, probe.unit);
      Scalar at_lead = level_scalar(img, t, width, d);
      Scalar per = s_scale(Rational(-probe.sign), probe.unit);
      GroupElement head =
          unit_at(dom_window, jprev, Scalar(Rational(1), Rational(0), d));
      if (t < prev_lead) {
        out.witness = g_add(head, unit_at(dom_window, j, per));
      } else {
        RatVec head_img = block_apply(m, jprev, width,
                                      Scalar(Rational(1), Rational(0), d));
        Scalar v0 = level_scalar(head_img, t, width, d);
        Scalar p = s_scale(Rational(probe.sign), at_lead);
        Rational kappa = rational_dominating(p, v0);
        out.witness =
            g_add(head, unit_at(dom_window, j, s_scale(kappa, per)));
      }
      return out;
    }
    prev_lead = t;

    // The leading block must act as multiplication by a positive field
    // element.
    Scalar one(Rational(1), Rational(0), d);
    Scalar v1 = level_scalar(block_apply(m, j, width, one), t, width, d);
    if (width == 1) {
      if (s_sign(v1) <= 0) {
        out.witness = unit_at(dom_window, j, one);
        return out;
      }
      continue;
    }
    Scalar root(Rational(0), Rational(1), d);
    Scalar v2 = level_scalar(block_apply(m, j, width, root), t, width, d);
    bool is_mult = s_eq(v2, s_mul(root, v1)) && s_sign(v1) > 0;
    if (!is_mult) {
      Scalar s = refute_block(v1, v2, d);
      out.witness = unit_at(dom_window, j, s);
      return out;
    }
  }
  out.preserving = true;
  return out;
}

GroupElement sample_element(const Window& w, Sampler& rng) {
  RatVec v(static_cast<size_t>(w.slots()), Rational(0));
  for (auto& x : v) {
    if (rng.chance(2, 3)) x = sample_rational(rng);
  }
  return w.element(v);
}

void oracle_cross_check(const GroupCtx& domain, const GroupCtx& target,
                        const RatMatrix& m, const Structural& structural) {
  Window dom_window = Window::full(domain);
  Window tgt_window = Window::full(target);
  std::optional<GroupElement> sampled;
  for (int i = 0; i < kOrderOracleSamples; ++i) {
    Sampler rng(kOrderOracleSeed, 1, static_cast<uint64_t>(i));
    GroupElement g = sample_element(dom_window, rng);
    int sign = g_sign(g);
    if (sign == 0) continue;
    if (sign < 0) g = g_neg(g);
    GroupElement img = tgt_window.element(mat_vec(m, *dom_window.coords(g)));
    if (g_sign(img) < 0) {
      sampled = g;
      break;
    }
  }
  if (structural.preserving && sampled.has_value()) {
    fail(ErrorCode::oracle_disagreement,
         "structural order check accepted a map refuted by sample " +
             format_element(*sampled));
  }
  if (!structural.preserving) {
    const GroupElement& w = *structural.witness;
    GroupElement img = tgt_window.element(mat_vec(m, *dom_window.coords(w)));
    if (g_sign(w) <= 0 || g_sign(img) >= 0) {
      fail(ErrorCode::oracle_disagreement,
           "structural witness " + format_element(w) +
               " does not refute order preservation");
    }
  }
}

}  // namespace

OrderCheck is_order_preserving(const GroupCtx& domain, const GroupCtx& target,
                               const RatMatrix& matrix) {
  if (domain.kind != GroupCtx::Kind::lex ||
      target.kind != GroupCtx::Kind::lex || domain.field != target.field) {
    fail(ErrorCode::context_mismatch,
         "order check needs lex contexts over one field");
  }
  size_t rows = static_cast<size_t>(target.dim * target.field.width());
  size_t cols = static_cast<size_t>(domain.dim * domain.field.width());
  if (matrix.size() != rows) {
    fail(ErrorCode::dimension_mismatch, "matrix row count mismatch");
  }
  for (auto& r : matrix) {
    if (r.size() != cols) {
      fail(ErrorCode::dimension_mismatch, "matrix column count mismatch");
    }
  }
  Structural structural = structural_order_check(domain, target, matrix);
  oracle_cross_check(domain, target, matrix, structural);
  OrderCheck out;
  out.preserving = structural.preserving;
  out.witness = structural.witness;
  return out;
}

MorphismStage MorphismStage::projection(int keep) {
  MorphismStage s;
  s.kind = Kind::projection;
  s.keep = keep;
  return s;
}

MorphismStage MorphismStage::hahn_truncate(Rational cut) {
  MorphismStage s;
  s.kind = Kind::hahn_truncate;
  s.cut = std::move(cut);
  return s;
}

MorphismStage MorphismStage::make_shear(RatMatrix t) {
  MorphismStage s;
  s.kind = Kind::shear;
  s.shear = std::move(t);
  return s;
}

KernelDesc KernelDesc::lex_span(Subgroup span) {
  KernelDesc k;
  k.ambient_ = span.ambient();
  k.span_ = std::move(span);
  return k;
}

KernelDesc KernelDesc::hahn_below(GroupCtx ambient, Rational cut) {
  KernelDesc k;
  k.ambient_ = std::move(ambient);
  k.cut_ = std::move(cut);
  return k;
}

bool KernelDesc::member(const GroupElement& g) const {
  if (g.ctx() != ambient_) {
    fail(ErrorCode::context_mismatch, "kernel membership across contexts");
  }
  if (span_.has_value()) return span_->contains(g);
  for (auto& t : g.terms()) {
    if (t.exponent >= *cut_) return false;
  }
  return true;
}

int KernelDesc::dim() const {
  if (!span_.has_value()) {
    fail(ErrorCode::unsupported_operation,
         "hahn kernels have no finite dimension");
  }
  return span_->dim();
}

std::string KernelDesc::describe() const {
  if (span_.has_value()) {
    if (span_->is_trivial()) return "{0}";
    std::string out = "span_Q{";
    for (size_t i = 0; i < span_->basis().size(); ++i) {
      if (i > 0) out += ", ";
      out += format_element(span_->basis()[i]);
    }
    return out + "}";
  }
  return "{support strictly below exponent " + cut_->to_string() + "}";
}

Morphism Morphism::make(GroupCtx domain, std::vector<MorphismStage> stages) {
  Morphism f;
  f.domain_ = domain;
  f.stages_ = stages;
  int width = domain.field.width();

  if (domain.kind == GroupCtx::Kind::lex) {
    int cur = domain.dim;
    RatMatrix m = mat_identity(cur * width);
    for (auto& stage : stages) {
      switch (stage.kind) {
        case MorphismStage::Kind::projection: {
          if (stage.keep < 1 || stage.keep >= cur) {
            fail(ErrorCode::dimension_mismatch,
                 "projection must keep between 1 and " +
                     std::to_string(cur - 1) + " coordinates");
          }
          RatMatrix p(static_cast<size_t>(stage.keep * width),
                      RatVec(static_cast<size_t>(cur * width), Rational(0)));
          for (int i = 0; i < stage.keep * width; ++i) {
            p[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
          }
          m = mat_mul(p, m);
          cur = stage.keep;
          break;
        }
        case MorphismStage::Kind::shear: {
          GroupCtx ctx = GroupCtx::lex(cur, domain.field);
          if (stage.shear.size() != static_cast<size_t>(cur * width)) {
            fail(ErrorCode::dimension_mismatch,
                 "shear must be square of size " +
                     std::to_string(cur * width));
          }
          auto inverse = mat_inverse(stage.shear);
          if (!inverse.has_value()) {
            fail(ErrorCode::schema_error, "shear matrix is not invertible");
          }
          OrderCheck fwd = is_order_preserving(ctx, ctx, stage.shear);
          if (!fwd.preserving) {
            fail(ErrorCode::schema_error,
                 "shear is not order-preserving; witness " +
                     format_element(*fwd.witness));
          }
          OrderCheck bwd = is_order_preserving(ctx, ctx, *inverse);
          if (!bwd.preserving) {
            fail(ErrorCode::schema_error,
                 "shear inverse is not order-preserving; witness " +
                     format_element(*bwd.witness));
          }
          m = mat_mul(stage.shear, m);
          break;
        }
        case MorphismStage::Kind::hahn_truncate:
          fail(ErrorCode::context_mismatch, "truncation of a lex group");
      }
    }
    f.target_ = GroupCtx::lex(cur, domain.field);
    f.matrix_ = std::move(m);
    RatMatrix null_rows = nullspace(f.matrix_, domain.dim * width);
    Window w = Window::full(domain);
    std::vector<GroupElement> kernel_gens;
    kernel_gens.reserve(null_rows.size());
    for (auto& row : null_rows) kernel_gens.push_back(w.element(row));
    f.kernel_ = std::make_shared<KernelDesc>(
        KernelDesc::lex_span(Subgroup(domain, std::move(kernel_gens),
                                      Ring::q)));
    return f;
  }

  bool have_cut = false;
  Rational cut(0);
  for (auto& stage : stages) {
    if (stage.kind != MorphismStage::Kind::hahn_truncate) {
      fail(ErrorCode::context_mismatch,
           "hahn morphisms support truncation stages only");
    }
    if (!have_cut || stage.cut > cut) cut = stage.cut;
    have_cut = true;
  }
  if (!have_cut) {
    fail(ErrorCode::schema_error, "hahn morphism needs a truncation stage");
  }
  f.target_ = domain;
  f.cut_ = cut;
  f.kernel_ = std::make_shared<KernelDesc>(
      KernelDesc::hahn_below(domain, std::move(cut)));
  return f;
}

const RatMatrix& Morphism::matrix() const {
  if (!is_lex()) {
    fail(ErrorCode::unsupported_operation, "hahn morphisms have no matrix");
  }
  return matrix_;
}

const Rational& Morphism::cut() const {
  if (is_lex()) {
    fail(ErrorCode::unsupported_operation, "lex morphisms have no cut");
  }
  return cut_;
}

GroupElement Morphism::apply(const GroupElement& g) const {
  if (g.ctx() != domain_) {
    fail(ErrorCode::context_mismatch,
         "element of " + g.ctx().to_string() + " under a morphism on " +
             domain_.to_string());
  }
  if (is_lex()) {
    Window dom = Window::full(domain_);
    Window tgt = Window::full(target_);
    return tgt.element(mat_vec(matrix_, *dom.coords(g)));
  }
  TermList kept;
  for (auto& t : g.terms()) {
    if (t.exponent >= cut_) kept.push_back(t);
  }
  return GroupElement::hahn(target_, std::move(kept));
}

std::string Morphism::describe() const {
  auto stage_str = [](const MorphismStage& s) -> std::string {
    switch (s.kind) {
      case MorphismStage::Kind::projection:
        return "Projection(keep=" + std::to_string(s.keep) + ")";
      case MorphismStage::Kind::hahn_truncate:
        return "HahnTruncate(cut=" + s.cut.to_string() + ")";
      case MorphismStage::Kind::shear: {
        std::string out = "Shear([";
        for (size_t r = 0; r < s.shear.size(); ++r) {
          if (r > 0) out += ", ";
          out += "[";
          for (size_t c = 0; c < s.shear[r].size(); ++c) {
            if (c > 0) out += ", ";
            out += s.shear[r][c].to_string();
          }
          out += "]";
        }
        return out + "])";
      }
    }
    return "?";
  };
  if (stages_.empty()) return "Identity";
  if (stages_.size() == 1) return stage_str(stages_.front());
  std::string out = "Compose(";
  for (size_t i = 0; i < stages_.size(); ++i) {
    if (i > 0) out += ", ";
    out += stage_str(stages_[i]);
  }
  return out + ")";
}

Subgroup section_subgroup(const Morphism& f, const RatMatrix& t) {
  if (!f.is_lex()) {
    fail(ErrorCode::unsupported_operation,
         "sections of hahn truncations have no finite description");
  }
  const RatMatrix& m = f.matrix();
  size_t target_slots = m.size();
  const Subgroup& kernel = *f.kernel().span();
  size_t kdim = static_cast<size_t>(kernel.dim());
  if (t.size() != kdim) {
    fail(ErrorCode::dimension_mismatch,
         "section matrix needs " + std::to_string(kdim) + " rows");
  }
  for (auto& row : t) {
    if (row.size() != target_slots) {
      fail(ErrorCode::dimension_mismatch,
           "section matrix needs " + std::to_string(target_slots) +
               " columns");
    }
  }
  Window dom = Window::full(f.domain());
  std::vector<GroupElement> gens;
  gens.reserve(target_slots);
  for (size_t j = 0; j < target_slots; ++j) {
    RatVec unit(target_slots, Rational(0));
    unit[j] = Rational(1);
    auto lift = solve_linear(m, unit);
    if (!lift.has_value()) {
      fail(ErrorCode::internal, "pipeline matrix lost surjectivity");
    }
    RatVec kcoords(kdim, Rational(0));
    for (size_t r = 0; r < kdim; ++r) kcoords[r] = t[r][j];
    GroupElement gen = dom.element(*lift);
    if (kdim > 0) gen = g_add(gen, kernel.from_coords(kcoords));
    gens.push_back(std::move(gen));
  }
  return Subgroup(f.domain(), std::move(gens), Ring::q);
}

Subgroup complement_of_kernel(const Morphism& f) {
  if (!f.is_lex()) {
    fail(ErrorCode::unsupported_operation,
         "complements for hahn truncations are not finitely generated");
  }
  const Subgroup& kernel = *f.kernel().span();
  Window dom = Window::full(f.domain());
  int slots = dom.slots();
  RatMatrix cur = kernel.echelon().rows;
  int rank = static_cast<int>(cur.size());
  std::vector<GroupElement> ext;
  for (int s = 0; s < slots; ++s) {
    RatVec unit(static_cast<size_t>(slots), Rational(0));
    unit[static_cast<size_t>(s)] = Rational(1);
    RatMatrix trial = cur;
    trial.push_back(unit);
    if (mat_rank(trial) > rank) {
      cur.push_back(unit);
      ++rank;
      ext.push_back(dom.element(unit));
    }
  }
  return Subgroup(f.domain(), std::move(ext), Ring::q);
}

}  // namespace ogtame
