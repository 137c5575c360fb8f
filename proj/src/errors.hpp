// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_ERRORS_HPP
#define OGTAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ogtame {

// Stable error codes. The C API exposes the same numbering, so entries
// must only ever be appended.
enum class ErrorCode : int {
  parse_error = 1,
  schema_error = 2,
  unresolved_name = 3,
  field_mismatch = 4,
  context_mismatch = 5,
  dimension_mismatch = 6,
  division_by_zero = 7,
  zero_element = 8,
  non_divisible_subgroup = 9,
  non_positive = 10,
  not_in_valuation_ring = 11,
  precision_exceeded = 12,
  unsupported_operation = 13,
  budget_exhausted = 14,
  oracle_disagreement = 15,
  io_error = 16,
  internal = 17,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::schema_error: return "schema_error";
    case ErrorCode::unresolved_name: return "unresolved_name";
    case ErrorCode::field_mismatch: return "field_mismatch";
    case ErrorCode::context_mismatch: return "context_mismatch";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::zero_element: return "zero_element";
    case ErrorCode::non_divisible_subgroup: return "non_divisible_subgroup";
    case ErrorCode::non_positive: return "non_positive";
    case ErrorCode::not_in_valuation_ring: return "not_in_valuation_ring";
    case ErrorCode::precision_exceeded: return "precision_exceeded";
    case ErrorCode::unsupported_operation: return "unsupported_operation";
    case ErrorCode::budget_exhausted: return "budget_exhausted";
    case ErrorCode::oracle_disagreement: return "oracle_disagreement";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace ogtame

#endif  // OGTAME_ERRORS_HPP
