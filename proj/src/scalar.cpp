// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "scalar.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ogtame {

namespace {

// Trial division bound for the squarefree test. Leftover cofactors are
// handled exactly by a perfect-square check.
constexpr unsigned long kTrialBound = 1000000;

bool is_squarefree(unsigned long d) {
  mpz_class rest(d);
  for (unsigned long p = 2; p <= kTrialBound && rest > 1; ++p) {
    if (rest % p == 0) {
      rest /= p;
      if (rest % p == 0) return false;
    }
    if (mpz_class(p) * p > rest) break;
  }
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) return false;
  return true;
}

unsigned long common_d(const Scalar& x, const Scalar& y) {
  if (x.d == y.d) return x.d;
  if (x.d == 0) return y.d;
  if (y.d == 0) return x.d;
  fail(ErrorCode::field_mismatch,
       "mixed radicands sqrt(" + std::to_string(x.d) + ") and sqrt(" +
           std::to_string(y.d) + ")");
}

Rational rational_d(unsigned long d) {
  return Rational(mpz_class(d), mpz_class(1));
}

}  // namespace

Field Field::quadratic(unsigned long d) {
  if (d < 2) {
    fail(ErrorCode::schema_error, "quadratic radicand must be at least 2");
  }
  if (!is_squarefree(d)) {
    fail(ErrorCode::schema_error,
         "radicand " + std::to_string(d) + " is not squarefree");
  }
  return Field(d);
}

std::string Field::to_string() const {
  if (d_ == 0) return "Q";
  return "Q(sqrt(" + std::to_string(d_) + "))";
}

Scalar::Scalar(Rational ra, Rational rb, unsigned long dd)
    : a(std::move(ra)), b(std::move(rb)), d(dd) {
  if (d == 0 && !b.is_zero()) {
    fail(ErrorCode::field_mismatch, "sqrt part outside a quadratic field");
  }
  if (b.is_zero()) d = dd;  // keep the tag for later widening
}

Scalar s_add(const Scalar& x, const Scalar& y) {
  return Scalar(x.a + y.a, x.b + y.b, common_d(x, y));
}

Scalar s_sub(const Scalar& x, const Scalar& y) {
  return Scalar(x.a - y.a, x.b - y.b, common_d(x, y));
}

Scalar s_mul(const Scalar& x, const Scalar& y) {
  unsigned long d = common_d(x, y);
  Rational dd = rational_d(d);
  return Scalar(x.a * y.a + x.b * y.b * dd, x.a * y.b + x.b * y.a, d);
}

Scalar s_neg(const Scalar& x) { return Scalar(-x.a, -x.b, x.d); }

Scalar s_inv(const Scalar& x) {
  if (x.is_zero()) fail(ErrorCode::division_by_zero, "inverse of 0");
  if (x.b.is_zero()) return Scalar(x.a.reciprocal(), Rational(0), x.d);
  Rational norm = x.a * x.a - x.b * x.b * rational_d(x.d);
  if (norm.is_zero()) {
    fail(ErrorCode::internal, "zero norm for nonzero quadratic scalar");
  }
  return Scalar(x.a / norm, -x.b / norm, x.d);
}

Scalar s_div(const Scalar& x, const Scalar& y) { return s_mul(x, s_inv(y)); }

Scalar s_scale(const Rational& q, const Scalar& x) {
  return Scalar(q * x.a, q * x.b, x.d);
}

Scalar s_abs(const Scalar& x) { return s_sign(x) < 0 ? s_neg(x) : x; }

Scalar s_pow_int(const Scalar& x, long e) {
  if (e == 0) return Scalar(Rational(1), Rational(0), x.d);
  if (e < 0) return s_inv(s_pow_int(x, -e));
  Scalar acc(Rational(1), Rational(0), x.d);
  Scalar base = x;
  unsigned long rest = static_cast<unsigned long>(e);
  while (rest > 0) {
    if (rest & 1) acc = s_mul(acc, base);
    base = s_mul(base, base);
    rest >>= 1;
  }
  return acc;
}

int s_sign(const Scalar& x) {
  int sa = x.a.sign();
  int sb = x.b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the sign follows whichever of a^2 and b^2*d is
  // larger. Equality is impossible since d is not a rational square.
  Rational left = x.a * x.a;
  Rational right = x.b * x.b * rational_d(x.d);
  if (left == right) {
    fail(ErrorCode::internal, "radicand admits a rational square root");
  }
  return left > right ? sa : sb;
}

int s_cmp(const Scalar& x, const Scalar& y) { return s_sign(s_sub(x, y)); }

std::string format_scalar(const Scalar& x) {
  if (x.b.is_zero()) return x.a.to_string();
  std::string root = "sqrt(" + std::to_string(x.d) + ")";
  if (x.a.is_zero()) return x.b.to_string() + "*" + root;
  std::string head = x.a.to_string();
  if (x.b.sign() > 0) {
    return head + "+" + x.b.to_string() + "*" + root;
  }
  return head + "-" + (-x.b).to_string() + "*" + root;
}

namespace {

struct TermPiece {
  bool has_root = false;
  Rational coeff;
  unsigned long root_d = 0;
};

TermPiece parse_piece(const Field& field, std::string_view piece,
                      std::string_view whole) {
  TermPiece out;
  size_t root_pos = piece.find("sqrt");
  if (root_pos == std::string_view::npos) {
    out.coeff = Rational::parse(piece);
    return out;
  }
  out.has_root = true;
  std::string_view prefix = piece.substr(0, root_pos);
  std::string_view rest = piece.substr(root_pos + 4);
  size_t open = rest.find_first_not_of(" \t");
  if (open == std::string_view::npos || rest[open] != '(') {
    fail(ErrorCode::parse_error, "expected sqrt(...) in '" + std::string(whole) + "'");
  }
  size_t close = rest.find(')', open);
  if (close == std::string_view::npos) {
    fail(ErrorCode::parse_error, "unclosed sqrt in '" + std::string(whole) + "'");
  }
  std::string_view arg = rest.substr(open + 1, close - open - 1);
  size_t tail = rest.find_first_not_of(" \t", close + 1);
  if (tail != std::string_view::npos) {
    fail(ErrorCode::parse_error, "trailing text in '" + std::string(whole) + "'");
  }
  Rational arg_q = Rational::parse(arg);
  if (!arg_q.is_integer() || arg_q.sign() <= 0) {
    fail(ErrorCode::parse_error, "sqrt argument must be a positive integer");
  }
  if (!arg_q.num().fits_ulong_p()) {
    fail(ErrorCode::parse_error, "sqrt argument out of range");
  }
  out.root_d = arg_q.num().get_ui();
  if (!field.is_quadratic() || out.root_d != field.d()) {
    fail(ErrorCode::field_mismatch,
         "sqrt(" + std::to_string(out.root_d) + ") is not available in " +
             field.to_string());
  }
  size_t pend = prefix.find_last_not_of(" \t");
  if (pend == std::string_view::npos) {
    out.coeff = Rational(1);
    return out;
  }
  prefix = prefix.substr(0, pend + 1);
  if (prefix == "-") {
    out.coeff = Rational(-1);
  } else if (prefix == "+") {
    out.coeff = Rational(1);
  } else {
    if (prefix.back() != '*') {
      fail(ErrorCode::parse_error,
           "expected '*' before sqrt in '" + std::string(whole) + "'");
    }
    out.coeff = Rational::parse(prefix.substr(0, prefix.size() - 1));
  }
  return out;
}

}  // namespace

Scalar parse_scalar(const Field& field, std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) {
    fail(ErrorCode::parse_error, "empty scalar literal");
  }
  std::string_view body = text.substr(begin, end - begin + 1);

  // Split at top-level '+'/'-' separators. A sign at position 0 or right
  // after '*', '/', or '(' belongs to the following number instead.
  std::vector<std::pair<int, std::string_view>> pieces;
  int sign = 1;
  size_t start = 0;
  char prev = '\0';
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if ((c == '+' || c == '-') && i > 0 &&
        (std::isdigit(static_cast<unsigned char>(prev)) || prev == ')')) {
      pieces.emplace_back(sign, body.substr(start, i - start));
      sign = c == '-' ? -1 : 1;
      start = i + 1;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  pieces.emplace_back(sign, body.substr(start));

  bool saw_plain = false;
  bool saw_root = false;
  Rational a(0);
  Rational b(0);
  for (auto& [s, piece] : pieces) {
    TermPiece parsed = parse_piece(field, piece, text);
    Rational signed_coeff = s < 0 ? -parsed.coeff : parsed.coeff;
    if (parsed.has_root) {
      if (saw_root) {
        fail(ErrorCode::parse_error,
             "more than one sqrt term in '" + std::string(text) + "'");
      }
      saw_root = true;
      b = signed_coeff;
    } else {
      if (saw_plain) {
        fail(ErrorCode::parse_error,
             "more than one rational term in '" + std::string(text) + "'");
      }
      saw_plain = true;
      a = signed_coeff;
    }
  }
  return Scalar(a, b, field.d());
}

Scalar in_field(const Field& field, const Scalar& x) {
  if (!x.b.is_zero()) {
    if (!field.is_quadratic() || field.d() != x.d) {
      fail(ErrorCode::field_mismatch,
           "scalar " + format_scalar(x) + " is not in " + field.to_string());
    }
    return x;
  }
  return Scalar(x.a, Rational(0), field.d());
}

}  // namespace ogtame
