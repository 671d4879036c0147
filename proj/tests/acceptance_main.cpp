// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion delegates to the corresponding verification suite,
// which pins every tolerance in code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "treenergy/verify.hpp"

using treenergy::SuiteReport;

int main() {
    struct Criterion {
        const char* label;
        std::function<SuiteReport()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 table1 regression (60 values, |diff| <= 5e-5)", [] { return treenergy::suite_table1(); }},
        {"2 verdict grid (complete case analysis, all decisive)",
         [] { return treenergy::suite_verdict_grid(); }},
        {"3 exact identities (Eqs. for m+(Ta), m+(Tb), difference; zero tolerance)",
         [] { return treenergy::suite_identities(); }},
        {"4 energy-oracle agreement (<= 1e-8; paths <= 1e-10)",
         [] { return treenergy::suite_energy_oracles(); }},
        {"5 brute-force extremal check (theorem11 suite, n <= 14)",
         [] { return treenergy::suite_theorem11(); }},
        {"6 lemma suites (recursions, sandwich, log, closed form, parity bounds)",
         [] { return treenergy::suite_lemmas(); }},
        {"7 proof constants, parity thresholds, analytic negativity",
         [] { return treenergy::suite_proof_bounds(); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        SuiteReport report;
        try {
            report = c.run();
        } catch (const std::exception& e) {
            std::printf("FAIL criterion %s: exception: %s\n", c.label, e.what());
            ++failed;
            continue;
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (report.passed()) {
            std::printf("PASS criterion %s: %ld cases [%.1fs]\n", c.label, report.cases_run,
                        secs);
        } else {
            std::printf("FAIL criterion %s: %zu of %ld cases failed [%.1fs]\n", c.label,
                        report.failures.size(), report.cases_run, secs);
            for (const auto& f : report.failures)
                std::printf("     %s: expected %s, got %s\n", f.case_id.c_str(),
                            f.expected.c_str(), f.got.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
