#pragma once

#include <string>
#include <vector>

#include "krlab/partitions.hpp"

namespace krlab {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample or empty
    int truncation = 0;
};

struct VerificationReport {
    std::string suite;
    int max_n = 0;
    std::vector<CheckResult> checks;
    long long wall_ms = 0;  // kept out of the data payload proper

    bool passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
    std::string to_json() const;
};

// Suites: "theorems" (series == enumeration for all 13 variants),
// "conjectures" (six product identities at x=1), "roundtrip" (bijections
// both ways plus the weight ledger), "section5" (alternative-series
// equalities), "all". max_n <= 0 selects the suite default.
VerificationReport run_suite(const std::string& suite, int max_n, int threads = 0);

// Thread cap from KRLAB_THREADS, else hardware concurrency.
int default_thread_count();

}  // namespace krlab
