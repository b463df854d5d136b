#include "tautring/report.hpp"

#include <json.hpp>

#include <sstream>

namespace tautring {

namespace {
const char* statusName(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
    }
    return "?";
}
} // namespace

int CheckReport::passCount() const {
    int n = 0;
    for (const auto& r : records) n += (r.status == CheckStatus::Pass);
    return n;
}

int CheckReport::failCount() const {
    int n = 0;
    for (const auto& r : records) n += (r.status == CheckStatus::Fail);
    return n;
}

int CheckReport::skipCount() const {
    int n = 0;
    for (const auto& r : records) n += (r.status == CheckStatus::Skipped);
    return n;
}

int CheckReport::exitCode() const {
    if (failCount() > 0) return 1;
    if (skipCount() > 0) return 3;
    return 0;
}

std::string CheckReport::toText() const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    os << "model: " << model << "\n";
    for (const auto& r : records) {
        os << "  [" << statusName(r.status) << "] " << r.id;
        if (r.status == CheckStatus::Fail && !r.witness.empty())
            os << "\n          witness: " << r.witness;
        os << "\n";
    }
    os << "summary: " << passCount() << " passed, " << failCount() << " failed, "
       << skipCount() << " skipped\n";
    return os.str();
}

std::string CheckReport::toJson() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["model"] = model;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json rec;
        rec["id"] = r.id;
        rec["status"] = statusName(r.status);
        if (!r.witness.empty()) rec["witness"] = r.witness;
        rec["time_ms"] = r.millis;
        j["checks"].push_back(rec);
    }
    j["summary"] = {{"pass", passCount()}, {"fail", failCount()}, {"skipped", skipCount()}};
    return j.dump(2);
}

} // namespace tautring
