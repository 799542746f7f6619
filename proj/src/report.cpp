#include "bicone/report.hpp"

#include <algorithm>

namespace bicone {

nlohmann::json report_to_json(const Report& r) {
    return nlohmann::json{
        {"claim_id", r.claim_id},   {"status", r.status},
        {"computed", r.computed},   {"expected", r.expected},
        {"provenance", r.provenance}, {"elapsed_ms", r.elapsed_ms},
        {"details", r.details},
    };
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.status = j.at("status").get<std::string>();
    r.computed = j.at("computed");
    r.expected = j.at("expected");
    r.provenance = j.at("provenance").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.details = j.at("details").get<std::string>();
    return r;
}

nlohmann::json reports_document(std::vector<Report> reports, uint64_t seed) {
    std::sort(reports.begin(), reports.end(),
              [](const Report& a, const Report& b) { return a.claim_id < b.claim_id; });
    nlohmann::json arr = nlohmann::json::array();
    for (auto& r : reports) arr.push_back(report_to_json(r));
    return nlohmann::json{{"schema", 1}, {"seed", seed}, {"reports", arr}};
}

bool any_failed(const std::vector<Report>& reports) {
    for (auto& r : reports)
        if (r.status == "fail") return true;
    return false;
}

} // namespace bicone
