// Plan execution: expands (config, suite) entries into check rows, runs them
// on a task-parallel worker pool (rows are pure), and assembles a
// newline-delimited JSON report (one row object per check plus a trailing
// summary object). Exit semantics: mathematical failures make the run
// "failed"; I/O problems throw and are reported separately by callers.
#pragma once

#include <string>
#include <vector>

#include "walg/suites.hpp"

namespace walg {

struct PlanEntry {
    Config config;
    std::string suite;
    CheckOptions options;
};

struct VerificationPlan {
    std::vector<PlanEntry> entries;
    int jobs = 0;             // 0 = WALG_JOBS env or hardware concurrency
    std::string report_path;  // empty = no file output
};

struct CheckResult {
    Config config;
    std::string suite;
    Json params;
    bool pass = false;
    Json witness;
    double seconds = 0.0;
};

struct Report {
    std::vector<CheckResult> rows;
    std::size_t passed = 0;
    std::size_t failed = 0;
    double wall_seconds = 0.0;
    int jobs = 1;
    unsigned long seed = kDefaultSeed;

    bool all_pass() const { return failed == 0; }
};

// Default worker count: WALG_JOBS environment variable when set, otherwise
// hardware concurrency (at least 1).
int default_jobs();

Report run_suite(const VerificationPlan& plan);

Json report_row_to_json(const CheckResult& row);
Json report_summary_to_json(const Report& report);

}  // namespace walg
