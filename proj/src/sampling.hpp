// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_SAMPLING_HPP
#define OGTAME_SAMPLING_HPP

#include "rational.hpp"
#include "rng.hpp"
#include "scalar.hpp"

namespace ogtame {

inline Rational sample_rational(Sampler& rng, long max_num = 9,
                                long max_den = 9) {
  long num = rng.int_in(-max_num, max_num);
  long den = rng.int_in(1, max_den);
  return Rational(num, den);
}

inline Scalar sample_scalar(const Field& field, Sampler& rng,
                            long max_num = 9, long max_den = 9) {
  Rational a = sample_rational(rng, max_num, max_den);
  Rational b = field.is_quadratic() ? sample_rational(rng, max_num, max_den)
                                    : Rational(0);
  return Scalar(a, b, field.d());
}

}  // namespace ogtame

#endif  // OGTAME_SAMPLING_HPP
