#pragma once

#include <string>
#include <vector>

namespace tautring {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckRecord {
    std::string id;
    CheckStatus status;
    std::string witness; // reproducible DSL expression or triple index on failure
    double millis = 0;
};

/// Suite result with deterministic record ordering; renders as text or as a
/// stable JSON document.
struct CheckReport {
    std::string suite;
    std::string model;
    std::vector<CheckRecord> records;

    int passCount() const;
    int failCount() const;
    int skipCount() const;
    bool allPass() const { return failCount() == 0; }

    /// 0 all pass, 1 any fail, 3 skipped without fail.
    int exitCode() const;

    std::string toText() const;
    std::string toJson() const;
};

} // namespace tautring
