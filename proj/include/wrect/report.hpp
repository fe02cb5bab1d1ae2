#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace wrect {

using Json = nlohmann::ordered_json;

// Structured outcome of one identity check. The residual carries the
// offending expression when the check fails and is null otherwise.
struct Report {
    std::string check;
    Json params = Json::object();
    bool pass = true;
    Json residual;  // null when pass
    double wall_time_ms = 0.0;

    Json to_json(bool with_time) const {
        Json j;
        j["check"] = check;
        j["params"] = params;
        j["status"] = pass ? "pass" : "fail";
        j["residual"] = pass ? Json() : residual;
        j["wall_time_ms"] = with_time ? Json(wall_time_ms) : Json(0.0);
        return j;
    }
};

struct ReportSet {
    std::vector<Report> reports;

    void add(Report r) { reports.push_back(std::move(r)); }
    void add(const ReportSet& rs) { reports.insert(reports.end(), rs.reports.begin(), rs.reports.end()); }
    bool all_pass() const {
        for (auto& r : reports)
            if (!r.pass) return false;
        return true;
    }
    int failures() const {
        int k = 0;
        for (auto& r : reports)
            if (!r.pass) ++k;
        return k;
    }
};

}  // namespace wrect
