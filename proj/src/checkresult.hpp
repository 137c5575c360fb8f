// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_CHECKRESULT_HPP
#define OGTAME_CHECKRESULT_HPP

#include <string>
#include <vector>

namespace ogtame {

// One verified property inside a report: named, pass/fail, optionally
// skipped, with up to a few textual witnesses and the sample count.
struct CheckResult {
  std::string name;
  bool pass = false;
  bool evaluated = true;
  std::string note;
  std::vector<std::string> witnesses;
  long samples = 0;
};

// Accumulator for sampled checks.
struct SampleStats {
  long total = 0;
  long guarded = 0;  // samples excluded by a precondition
  std::vector<std::string> witnesses;

  void fail_case(const std::string& w) {
    if (witnesses.size() < 3) witnesses.push_back(w);
  }
  bool ok() const { return witnesses.empty(); }
};

inline void finish_check(CheckResult& r, const SampleStats& st) {
  r.samples = st.total;
  r.pass = st.ok();
  r.witnesses = st.witnesses;
  if (st.guarded > 0) {
    if (!r.note.empty()) r.note += "; ";
    r.note += std::to_string(st.guarded) + " samples excluded by guard";
  }
}

}  // namespace ogtame

#endif  // OGTAME_CHECKRESULT_HPP
