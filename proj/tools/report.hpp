#pragma once
#include "json.hpp"
#include "sqc/classify.hpp"
#include "sqc/datum.hpp"
#include "sqc/enumerate.hpp"
#include "sqc/present.hpp"

namespace sqc::report {

inline constexpr int kSchemaVersion = 1;

// canonical forms are skipped beyond this many relabelings
inline constexpr double kCanonicalBudget = 1e8;

nlohmann::json datum_json(const Datum& d);
nlohmann::json validation_json(const ValidationReport& r);
nlohmann::json side_json(const Datum& d, const SideReport& r);
nlohmann::json quotient_json(const QuotientReport& q);
nlohmann::json census_json(const CensusResult& c);
nlohmann::json entry_json(const CensusEntry& e);

std::string side_text(const Datum& d, const SideReport& r);

}  // namespace sqc::report
