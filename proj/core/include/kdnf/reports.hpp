#pragma once

// JSON rendering for verification reports.
//
// Every report object carries a "stats" member holding timing, solver
// counters, and the worker count. The canonical body is the report with
// "stats" removed, dumped with sorted keys; its FNV-1a 64 hash is what makes
// two runs comparable. finalize_report() stamps that hash into stats, so the
// canonical body itself stays hash-free.

#include "kdnf/solver.hpp"
#include "kdnf/verify.hpp"

#include <json.hpp>

#include <string>

namespace kdnf {

nlohmann::json report_json(const VerificationReport& rep);
nlohmann::json report_json(const WeightGadgetReport& rep);
nlohmann::json report_json(const BoundsReport& rep);
nlohmann::json report_json(const TarsiScanReport& rep);

/// Implication reports need the two formulas for naming the witness
/// variables; `g.names` covers the shared universe.
nlohmann::json report_json(const ImplicationResult& r, const DnfSet& d, const CdXorFormula& g);
nlohmann::json report_json(const PrecisionResult& r, const DnfSet& d, const CdXorFormula& g);

std::string canonical_report_body(const nlohmann::json& report);
std::string report_hash(const nlohmann::json& report);
nlohmann::json finalize_report(nlohmann::json report);

} // namespace kdnf
