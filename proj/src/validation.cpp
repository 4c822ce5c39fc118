#include "dcaq/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "dcaq/access_time.hpp"
#include "dcaq/organizedness.hpp"
#include "dcaq/simulator.hpp"

namespace dcaq::validation {

namespace {

std::string describe(Organization org) {
    switch (org) {
        case Organization::SortedSequentialList: return "binary search over sorted list";
        case Organization::BalancedBinaryTree: return "balanced tree descent";
        case Organization::UnsortedSequentialList: return "linear scan";
    }
    return "unknown";
}

std::string format_failure(const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::int64_t int_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

HardwareProfile random_hardware(std::mt19937_64& rng) {
    return HardwareProfile(uniform_in(rng, 1e-3, 10.0), uniform_in(rng, 0.0, 1.0),
                           uniform_in(rng, 0.0, 1e3), uniform_in(rng, 0.0, 1e3));
}

Scenario random_scenario_impl(std::mt19937_64& rng) {
    static constexpr Organization kOrganizations[] = {
        Organization::SortedSequentialList,
        Organization::BalancedBinaryTree,
        Organization::UnsortedSequentialList,
    };
    const Organization organization = kOrganizations[int_in(rng, 0, 2)];
    DooclDescriptor doocl(organization, int_in(rng, 1, 1024), uniform_in(rng, 0.01, 10.0),
                          int_in(rng, 1, 50), true);

    std::string text(static_cast<std::size_t>(int_in(rng, 1, 32)), 'a');
    for (char& c : text) c = static_cast<char>('a' + int_in(rng, 0, 25));
    Command command(text, int_in(rng, 1, 16));
    Component component("comp", int_in(rng, 1, 256), int_in(rng, 1, 256), int_in(rng, 1, 16));

    Environment environment = [&]() -> Environment {
        if (int_in(rng, 0, 1) == 0) {
            return LocalEnvironment{random_hardware(rng)};
        }
        return RemoteEnvironment{random_hardware(rng), random_hardware(rng),
                                 NetworkProfile::fixed(uniform_in(rng, 1e-3, 10.0))};
    }();

    return Scenario{doocl, std::move(environment), std::move(command), std::move(component),
                    std::nullopt};
}

}  // namespace

SuiteOutcome search_agreement(Organization organization, std::int64_t max_n, std::uint64_t seed) {
    SuiteOutcome outcome;
    outcome.name = describe(organization);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const SyntheticLibrary library =
            build_library(organization, n, seed + static_cast<std::uint64_t>(n));
        std::int64_t worst = 0;
        bool all_found = true;
        for (const std::uint64_t key : library.keys()) {
            const SearchOutcome result = empirical_search(library, key);
            all_found = all_found && result.found;
            worst = std::max(worst, result.probes);
        }
        const std::int64_t expected = search_iterations(organization, n);
        ++outcome.checks;
        if (worst != expected || !all_found) {
            ++outcome.failures;
            if (outcome.first_failure.empty()) {
                outcome.first_failure = format_failure(
                    "N=%lld: worst-case probes %lld, expected %lld%s",
                    static_cast<long long>(n), static_cast<long long>(worst),
                    static_cast<long long>(expected), all_found ? "" : " (missing key)");
            }
        }
    }
    return outcome;
}

SuiteOutcome replay_agreement(std::int64_t scenario_count, double tolerance, std::uint64_t seed,
                              bool inject_fault) {
    SuiteOutcome outcome;
    outcome.name = "replayed transfer vs analytic total";
    std::mt19937_64 rng(seed);
    for (std::int64_t i = 0; i < scenario_count; ++i) {
        const Scenario scenario = random_scenario_impl(rng);
        double analytic = 0.0;
        double rate = 0.0;
        if (const auto* local = std::get_if<LocalEnvironment>(&scenario.environment)) {
            analytic =
                local_access_time(scenario.command, scenario.component, local->client).total_ns();
        } else {
            const auto& remote = std::get<RemoteEnvironment>(scenario.environment);
            rate = remote.network.fixed_rate();
            analytic = remote_access_time(scenario.command, scenario.component, remote.client,
                                          remote.server, rate)
                           .total_ns();
        }
        double replayed = replay_transfer(scenario, rate);
        if (inject_fault) {
            replayed *= 1.0 + 1e-6;
        }
        const double relative = std::abs(replayed - analytic) / analytic;
        outcome.worst_relative_error = std::max(outcome.worst_relative_error, relative);
        ++outcome.checks;
        if (!(relative <= tolerance)) {
            ++outcome.failures;
            if (outcome.first_failure.empty()) {
                outcome.first_failure =
                    format_failure("scenario %lld: relative error %.3e exceeds %.3e",
                                   static_cast<long long>(i), relative, tolerance);
            }
        }
    }
    return outcome;
}

Scenario random_scenario(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_scenario_impl(rng);
}

std::vector<SuiteOutcome> run_all(const ValidateOptions& options) {
    if (options.max_n < 1) {
        throw ValidationError("max_n", "must be a positive count (>= 1)");
    }
    if (!(options.tolerance >= 0.0)) {
        throw ValidationError("tolerance", "must be nonnegative");
    }
    std::vector<SuiteOutcome> outcomes;
    outcomes.push_back(
        search_agreement(Organization::SortedSequentialList, options.max_n, options.seed));
    outcomes.push_back(
        search_agreement(Organization::BalancedBinaryTree, options.max_n, options.seed));
    outcomes.push_back(
        search_agreement(Organization::UnsortedSequentialList, options.max_n, options.seed));
    outcomes.push_back(replay_agreement(options.replay_scenarios, options.tolerance, options.seed,
                                        options.inject_fault));
    return outcomes;
}

}  // namespace dcaq::validation
