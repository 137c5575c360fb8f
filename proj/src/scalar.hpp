// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_SCALAR_HPP
#define OGTAME_SCALAR_HPP

#include <string>
#include <string_view>

#include "rational.hpp"

namespace ogtame {

// Coefficient field: either the rationals Q or a real quadratic
// extension Q(sqrt(d)) for a fixed squarefree d >= 2. Field objects are
// cheap values; two fields are interchangeable iff they compare equal.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field quadratic(unsigned long d);

  bool is_quadratic() const { return d_ != 0; }
  unsigned long d() const { return d_; }

  // Number of rational coordinates per scalar (1 or 2).
  int width() const { return d_ == 0 ? 1 : 2; }

  bool operator==(const Field& o) const { return d_ == o.d_; }
  bool operator!=(const Field& o) const { return d_ != o.d_; }

  std::string to_string() const;

 private:
  explicit Field(unsigned long d) : d_(d) {}
  unsigned long d_;
};

// Element a + b*sqrt(d) of a quadratic field, or a plain rational when
// d == 0 (then b is identically 0). All arithmetic and comparisons are
// exact; ordering is the real-number order of a + b*sqrt(d).
//
// Canonical text forms: "p/q", "r/s*sqrt(d)", "p/q+r/s*sqrt(d)",
// with "+" replaced by "-" when the sqrt part is negative.
struct Scalar {
  Rational a;
  Rational b;
  unsigned long d = 0;

  Scalar() = default;
  Scalar(Rational ra) : a(std::move(ra)) {}  // NOLINT: implicit by design
  Scalar(Rational ra, Rational rb, unsigned long dd);

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_one() const { return a.is_one() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }
};

Scalar s_add(const Scalar& x, const Scalar& y);
Scalar s_sub(const Scalar& x, const Scalar& y);
Scalar s_mul(const Scalar& x, const Scalar& y);
Scalar s_neg(const Scalar& x);
Scalar s_inv(const Scalar& x);
Scalar s_div(const Scalar& x, const Scalar& y);
Scalar s_scale(const Rational& q, const Scalar& x);
Scalar s_abs(const Scalar& x);
Scalar s_pow_int(const Scalar& x, long e);

// Exact sign of the real number x (-1, 0, or 1).
int s_sign(const Scalar& x);
// Three-way comparison in the real order (-1, 0, or 1).
int s_cmp(const Scalar& x, const Scalar& y);

inline bool s_eq(const Scalar& x, const Scalar& y) { return s_cmp(x, y) == 0; }

std::string format_scalar(const Scalar& x);
Scalar parse_scalar(const Field& field, std::string_view text);

// Widens x to the given field; rejects mixing distinct radicands.
Scalar in_field(const Field& field, const Scalar& x);

}  // namespace ogtame

#endif  // OGTAME_SCALAR_HPP
