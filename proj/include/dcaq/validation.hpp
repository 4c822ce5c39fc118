#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcaq/model.hpp"

// Agreement suites between the analytic engines and the simulator oracle.
// Used by the CLI validate command and by the acceptance tests.

namespace dcaq::validation {

struct SuiteOutcome {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    double worst_relative_error = 0.0;  // replay suite only
    std::string first_failure;          // diagnostic for the first failing check

    bool passed() const noexcept { return failures == 0; }
};

struct ValidateOptions {
    std::int64_t max_n = 1024;        // search agreement covers N in 1..max_n
    double tolerance = 1e-9;          // replay vs analytic relative error bound
    std::int64_t replay_scenarios = 10000;
    std::uint64_t seed = 0xDCA0;
    // Deliberately perturbs replayed totals; lets tests confirm that the
    // suite actually detects disagreement.
    bool inject_fault = false;
};

// Worst-case empirical probes over all present keys vs search_iterations,
// for every N in 1..max_n.
SuiteOutcome search_agreement(Organization organization, std::int64_t max_n, std::uint64_t seed);

// Replayed transfer totals vs analytic breakdown totals over randomized
// scenarios, compared at the given relative tolerance.
SuiteOutcome replay_agreement(std::int64_t scenario_count, double tolerance, std::uint64_t seed,
                              bool inject_fault = false);

// Builds a valid pseudo-random scenario with a fixed network rate (when
// remote) from the given generator state. Exposed so tests can reuse the
// same scenario space.
Scenario random_scenario(std::uint64_t seed);

std::vector<SuiteOutcome> run_all(const ValidateOptions& options);

}  // namespace dcaq::validation
