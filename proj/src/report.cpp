#include "walg/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace walg {

int default_jobs() {
    if (const char* env = std::getenv("WALG_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

Report run_suite(const VerificationPlan& plan) {
    using clock = std::chrono::steady_clock;
    const auto wall_start = clock::now();

    struct PendingRow {
        Config config;
        CheckTask task;
    };
    std::vector<PendingRow> pending;
    unsigned long seed = kDefaultSeed;
    for (const PlanEntry& entry : plan.entries) {
        seed = entry.options.seed;
        for (CheckTask& task : make_suite_tasks(entry.suite, entry.config, entry.options))
            pending.push_back({entry.config, std::move(task)});
    }

    Report report;
    report.jobs = plan.jobs > 0 ? plan.jobs : default_jobs();
    report.seed = seed;
    report.rows.resize(pending.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= pending.size()) return;
            const auto row_start = clock::now();
            CheckOutcome outcome = pending[idx].task.run();
            CheckResult& row = report.rows[idx];
            row.config = pending[idx].config;
            row.suite = pending[idx].task.suite;
            row.params = pending[idx].task.params;
            row.pass = outcome.pass;
            row.witness = std::move(outcome.witness);
            row.seconds = std::chrono::duration<double>(clock::now() - row_start).count();
        }
    };
    std::size_t nthreads = static_cast<std::size_t>(report.jobs);
    if (pending.size() < nthreads) nthreads = pending.size();
    if (nthreads == 0) nthreads = 1;
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    for (const CheckResult& row : report.rows) (row.pass ? report.passed : report.failed)++;
    report.wall_seconds = std::chrono::duration<double>(clock::now() - wall_start).count();

    if (!plan.report_path.empty()) {
        std::ofstream out(plan.report_path);
        if (!out) throw std::runtime_error("run_suite: cannot open report file " + plan.report_path);
        for (const CheckResult& row : report.rows) out << report_row_to_json(row).dump() << "\n";
        out << report_summary_to_json(report).dump() << "\n";
        if (!out) throw std::runtime_error("run_suite: write failed for " + plan.report_path);
    }
    return report;
}

Json report_row_to_json(const CheckResult& row) {
    Json out{{"type", "check"},
             {"config", config_to_json(row.config)},
             {"check", row.suite},
             {"parameters", row.params},
             {"status", row.pass ? "pass" : "fail"},
             {"seconds", row.seconds}};
    if (!row.pass) out["witness"] = row.witness;
    return out;
}

Json report_summary_to_json(const Report& report) {
    return Json{{"type", "summary"},
                {"version", kToolkitVersion},
                {"total", report.rows.size()},
                {"passed", report.passed},
                {"failed", report.failed},
                {"wall_seconds", report.wall_seconds},
                {"jobs", report.jobs},
                {"seed", report.seed}};
}

}  // namespace walg
