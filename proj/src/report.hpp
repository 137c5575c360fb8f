// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_REPORT_HPP
#define OGTAME_REPORT_HPP

#include <string>

#include "json.hpp"
#include "monomial.hpp"
#include "series.hpp"
#include "tame.hpp"

namespace ogtame {

// Insertion-ordered JSON keeps machine reports byte-identical across
// runs; every numeric leaf is emitted as a canonical string.
using OrderedJson = nlohmann::ordered_json;

OrderedJson check_to_json(const CheckResult& c);
std::string check_to_text(const CheckResult& c);

OrderedJson st_to_json(const StResult& r);
std::string st_to_text(const StResult& r);

OrderedJson tame_to_json(const TameResult& r);
std::string tame_to_text(const TameResult& r);

OrderedJson section_to_json(const SectionCheck& r);
std::string section_to_text(const SectionCheck& r);

OrderedJson equivalence_to_json(const EquivalenceReport& r);
std::string equivalence_to_text(const EquivalenceReport& r);

OrderedJson valuation_report_to_json(const ValuationReport& r);
std::string valuation_report_to_text(const ValuationReport& r);

OrderedJson mono_st_to_json(const MonomialGroup& g, const MonoSt& r);
std::string mono_st_to_text(const MonomialGroup& g, const MonoSt& r);

}  // namespace ogtame

#endif  // OGTAME_REPORT_HPP
