#ifndef BICONE_REPORT_HPP
#define BICONE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bicone {

// Structured verification outcome for one claim. "inconclusive" and
// "budget-exceeded" never count as passes; a run fails only on "fail".
struct Report {
    std::string claim_id;
    std::string status;      // pass | fail | inconclusive | budget-exceeded
    nlohmann::json computed;
    nlohmann::json expected;
    std::string provenance;  // paper | trivial | derived
    double elapsed_ms = 0.0;
    std::string details;
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

// Full document: {"schema": 1, "seed": ..., "reports": [...]} with reports
// sorted by claim id.
nlohmann::json reports_document(std::vector<Report> reports, uint64_t seed);

bool any_failed(const std::vector<Report>& reports);

} // namespace bicone

#endif
