#pragma once

#include <string>
#include <vector>

#include "treenergy/energy.hpp"
#include "treenergy/tree.hpp"

namespace treenergy {

struct SuiteFailure {
    std::string case_id;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    SuiteReport() = default;
    explicit SuiteReport(std::string name) : suite_name(std::move(name)) {}

    std::string suite_name;
    long cases_run = 0;
    std::vector<SuiteFailure> failures;

    bool passed() const { return failures.empty(); }
    void record(bool ok, const std::string& case_id, const std::string& expected,
                const std::string& got) {
        ++cases_run;
        if (!ok) failures.push_back({case_id, expected, got});
    }
    std::string to_json() const;
};

struct TheoremConfig {
    int enumeration_cap = 14;  // n=15,16 work but take much longer
    QuadratureConfig quadrature;
};

/// Brute-force check of the extremal statement at one (n, Delta): the
/// energy-maximal enumerated tree with exactly two maximum-degree-Delta
/// vertices must be Tc (n <= 4*Delta-2) or the maximal_tree winner among
/// {Ta, Tb} (n >= 4*Delta-1). Ranking uses the eigenvalue route, with a
/// Coulson re-check of the top three whenever the top-two gap is below 1e-6.
SuiteReport verify_theorem_1_1(int n, int delta, const TheoremConfig& cfg = {});

/// Named invariant suites; name is one of: identities, lemmas, energy-oracles,
/// verdict-grid, table1, theorem11. Unknown names throw.
SuiteReport run_suite(const std::string& name);

// The individual suites behind run_suite (deterministic case order).
SuiteReport suite_identities();
SuiteReport suite_lemmas();
SuiteReport suite_energy_oracles();
SuiteReport suite_verdict_grid();
SuiteReport suite_table1();
SuiteReport suite_theorem11(const TheoremConfig& cfg = {});

/// Criterion checks for the proof constants, parity thresholds and the
/// closed-form bound negativity; not part of run_suite's six names.
SuiteReport suite_proof_bounds();

}  // namespace treenergy
