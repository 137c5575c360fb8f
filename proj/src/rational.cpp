// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace ogtame {

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) fail(ErrorCode::division_by_zero, "rational with denominator 0");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (d == 0) fail(ErrorCode::division_by_zero, "rational with denominator 0");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) {
    fail(ErrorCode::parse_error, "empty rational literal");
  }
  std::string_view body = text.substr(begin, end - begin + 1);
  std::string_view num = body;
  std::string_view den = "1";
  if (size_t slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    fail(ErrorCode::parse_error,
         "bad rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    fail(ErrorCode::parse_error,
         "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "reciprocal of 0");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base.is_zero()) {
    if (exp < 0) fail(ErrorCode::division_by_zero, "0 to a negative power");
    return Rational(0);
  }
  mpz_class n, d;
  unsigned long e =
      exp < 0 ? static_cast<unsigned long>(-(exp + 1)) + 1
              : static_cast<unsigned long>(exp);
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return exp < 0 ? Rational(d, n) : Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::division_by_zero, "division by 0");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  return v_.get_str();
}

}  // namespace ogtame
