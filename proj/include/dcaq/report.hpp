#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dcaq/model.hpp"
#include "dcaq/simulator.hpp"
#include "dcaq/validation.hpp"

// Report rendering for the CLI. Human reports are fixed-width tables with
// durations in ns plus derived us/ms/s. Machine reports are flat JSON with a
// fixed key order and doubles rendered with 17 significant digits, so
// identical inputs produce byte-identical output.

namespace dcaq::report {

std::string human_compute(const std::string& label, const Scenario& scenario,
                          const DcaqResult& result);
std::string machine_compute(const std::string& label, const Scenario& scenario,
                            const DcaqResult& result);

std::string human_compare(
    const std::vector<std::pair<std::string, DcaqResult>>& ranked);
std::string machine_compare(
    const std::vector<std::pair<std::string, DcaqResult>>& ranked);

std::string human_simulate(const std::string& label, const Scenario& scenario,
                           const McSummary& summary);
std::string machine_simulate(const std::string& label, const Scenario& scenario,
                             const McSummary& summary);

std::string human_validate(const std::vector<validation::SuiteOutcome>& outcomes,
                           const validation::ValidateOptions& options);
std::string machine_validate(const std::vector<validation::SuiteOutcome>& outcomes,
                             const validation::ValidateOptions& options);

}  // namespace dcaq::report
