#include <algorithm>

#include "doctest.h"
#include "dcaq/dcaq.hpp"
#include "dcaq/organizedness.hpp"
#include "dcaq/simulator.hpp"
#include "dcaq/validation.hpp"
#include "helpers.hpp"

using namespace dcaq;
using dcaq::test::rel_close;

TEST_CASE("build_library produces deterministic sorted unique keys") {
    const SyntheticLibrary library =
        build_library(Organization::SortedSequentialList, 16, 42);
    REQUIRE(library.size() == 16);
    for (std::size_t i = 1; i < library.keys().size(); ++i) {
        CHECK(library.keys()[i - 1] < library.keys()[i]);
    }
    const SyntheticLibrary again = build_library(Organization::SortedSequentialList, 16, 42);
    CHECK(library.keys() == again.keys());
    CHECK_THROWS_AS(build_library(Organization::SortedSequentialList, 0, 42), ValidationError);
}

TEST_CASE("build_library shuffles the unsorted kind but keeps the key set") {
    const SyntheticLibrary sorted = build_library(Organization::SortedSequentialList, 64, 7);
    const SyntheticLibrary unsorted =
        build_library(Organization::UnsortedSequentialList, 64, 7);
    std::vector<std::uint64_t> resorted = unsorted.keys();
    std::sort(resorted.begin(), resorted.end());
    CHECK(resorted == sorted.keys());
    CHECK(unsorted.keys() != sorted.keys());  // 64 keys, seeded shuffle
}

TEST_CASE("tree libraries report their measured probe height") {
    CHECK(build_library(Organization::BalancedBinaryTree, 1, 0).height() == 1);
    CHECK(build_library(Organization::BalancedBinaryTree, 1023, 7).height() == 10);
    CHECK(build_library(Organization::BalancedBinaryTree, 16, 3).height() == 4);
    CHECK_THROWS_AS(build_library(Organization::SortedSequentialList, 4, 0).height(), Error);
}

TEST_CASE("measured tree height equals the binary step formula, N = 1..1024") {
    for (std::int64_t n = 1; n <= 1024; ++n) {
        const SyntheticLibrary library = build_library(Organization::BalancedBinaryTree, n, n);
        CAPTURE(n);
        CHECK(library.height() == search_iterations(Organization::BalancedBinaryTree, n));
    }
}

TEST_CASE("empirical search on the sorted list") {
    const SyntheticLibrary library =
        build_library(Organization::SortedSequentialList, 16, 42);
    std::int64_t worst = 0;
    for (const std::uint64_t key : library.keys()) {
        const SearchOutcome outcome = empirical_search(library, key);
        CHECK(outcome.found);
        worst = std::max(worst, outcome.probes);
    }
    CHECK(worst == 4);

    const SyntheticLibrary single = build_library(Organization::SortedSequentialList, 1, 0);
    const SearchOutcome outcome = empirical_search(single, single.keys()[0]);
    CHECK(outcome.found);
    CHECK(outcome.probes == 1);

    // absent keys are reported not-found with their comparisons counted
    const SearchOutcome absent = empirical_search(library, library.keys().back() + 1);
    CHECK_FALSE(absent.found);
    CHECK(absent.probes == 4);
}

TEST_CASE("empirical search on the linear scan") {
    const SyntheticLibrary library =
        build_library(Organization::UnsortedSequentialList, 7, 5);
    std::int64_t worst = 0;
    for (const std::uint64_t key : library.keys()) {
        const SearchOutcome outcome = empirical_search(library, key);
        CHECK(outcome.found);
        worst = std::max(worst, outcome.probes);
    }
    CHECK(worst == 7);
    CHECK(empirical_search(library, library.keys().back()).probes == 7);

    const SearchOutcome absent = empirical_search(library, 0);
    CHECK_FALSE(absent.found);
    CHECK(absent.probes == 7);
}

TEST_CASE("empirical search on the balanced tree") {
    const SyntheticLibrary library = build_library(Organization::BalancedBinaryTree, 16, 9);
    std::int64_t worst = 0;
    for (const std::uint64_t key : library.keys()) {
        const SearchOutcome outcome = empirical_search(library, key);
        CHECK(outcome.found);
        worst = std::max(worst, outcome.probes);
    }
    CHECK(worst == 4);
    CHECK_FALSE(empirical_search(library, library.keys().back() + 1).found);

    const SyntheticLibrary single = build_library(Organization::BalancedBinaryTree, 1, 0);
    CHECK(empirical_search(single, single.keys()[0]).probes == 1);
}

TEST_CASE("tree and linear worst cases agree with the step formula, N = 1..1024") {
    for (std::int64_t n = 1; n <= 1024; ++n) {
        const SyntheticLibrary tree = build_library(Organization::BalancedBinaryTree, n, n + 1);
        std::int64_t worst = 0;
        bool all_found = true;
        for (const std::uint64_t key : tree.keys()) {
            const SearchOutcome outcome = empirical_search(tree, key);
            all_found = all_found && outcome.found;
            worst = std::max(worst, outcome.probes);
        }
        CAPTURE(n);
        CHECK(all_found);
        CHECK(worst == search_iterations(Organization::BalancedBinaryTree, n));
    }
    for (std::int64_t n = 1; n <= 256; ++n) {
        const SyntheticLibrary list =
            build_library(Organization::UnsortedSequentialList, n, n + 1);
        std::int64_t worst = 0;
        for (const std::uint64_t key : list.keys()) {
            worst = std::max(worst, empirical_search(list, key).probes);
        }
        CAPTURE(n);
        CHECK(worst == n);
    }
}

TEST_CASE("replay reproduces the worked transfer totals") {
    const Scenario desktop = dcaq::test::desktop_scenario();
    CHECK(rel_close(replay_transfer(desktop, 0.0), 83230.0));

    const Scenario lan = dcaq::test::lan_scenario();
    const double replayed = replay_transfer(lan, 0.1);
    CHECK(rel_close(replayed, 147217.2));
    CHECK(replayed == evaluate(lan).access_time_ns);  // payloads fit one chunk: bit-identical
}

TEST_CASE("replay agrees with the analytic totals over randomized scenarios") {
    const validation::SuiteOutcome outcome = validation::replay_agreement(10000, 1e-9, 99);
    CHECK(outcome.checks == 10000);
    CHECK(outcome.failures == 0);
    CHECK(outcome.worst_relative_error <= 1e-9);
}

TEST_CASE("an injected fault is detected by the replay suite") {
    const validation::SuiteOutcome outcome =
        validation::replay_agreement(100, 1e-9, 99, /*inject_fault=*/true);
    CHECK(outcome.failures > 0);
    CHECK_FALSE(outcome.passed());
    CHECK_FALSE(outcome.first_failure.empty());
}

TEST_CASE("search agreement suites pass for every organization") {
    for (const Organization organization :
         {Organization::SortedSequentialList, Organization::BalancedBinaryTree,
          Organization::UnsortedSequentialList}) {
        const validation::SuiteOutcome outcome =
            validation::search_agreement(organization, 256, 17);
        CHECK(outcome.checks == 256);
        CHECK(outcome.failures == 0);
    }
}

TEST_CASE("monte carlo over a fixed rate is degenerate") {
    const Scenario lan = dcaq::test::lan_scenario();
    const McSummary summary = monte_carlo_dcaq(lan, 100, 1);
    const double deterministic = evaluate(lan).dcaq;
    CHECK(summary.trials == 100);
    CHECK(summary.stddev == 0.0);
    CHECK(summary.mean == deterministic);
    CHECK(summary.min == deterministic);
    CHECK(summary.max == deterministic);
    CHECK(summary.degenerate);
    CHECK(summary.generator == "splitmix64");
}

TEST_CASE("monte carlo on a local scenario is degenerate too") {
    const McSummary summary = monte_carlo_dcaq(dcaq::test::desktop_scenario(), 10, 4);
    CHECK(summary.degenerate);
    CHECK(summary.stddev == 0.0);
}

TEST_CASE("monte carlo over a uniform rate stays inside the monotone bounds") {
    Scenario scenario = dcaq::test::lan_scenario();
    scenario.environment = RemoteEnvironment{HardwareProfile(0.05, 0.9, 20, 100),
                                             HardwareProfile(0.2, 0.92, 10, 90),
                                             NetworkProfile::uniform(0.05, 0.15)};
    const McSummary summary = monte_carlo_dcaq(scenario, 10000, 7);

    // the lowest rate yields the largest T and therefore the smallest quotient
    EvaluateOptions at_lo, at_hi;
    at_lo.network_rate_sample = 0.05;
    at_hi.network_rate_sample = 0.15;
    const double lower_bound = evaluate(scenario, at_lo).dcaq;
    const double upper_bound = evaluate(scenario, at_hi).dcaq;
    CHECK(lower_bound < upper_bound);
    CHECK(summary.min >= lower_bound);
    CHECK(summary.max <= upper_bound);
    CHECK(summary.mean >= lower_bound);
    CHECK(summary.mean <= upper_bound);
    CHECK(summary.min <= summary.p5);
    CHECK(summary.p5 <= summary.p50);
    CHECK(summary.p50 <= summary.p95);
    CHECK(summary.p95 <= summary.max);
    CHECK(summary.stddev > 0.0);
    CHECK_FALSE(summary.degenerate);
}

TEST_CASE("monte carlo is bit-for-bit reproducible for a given seed") {
    Scenario scenario = dcaq::test::lan_scenario();
    scenario.environment = RemoteEnvironment{HardwareProfile(0.05, 0.9, 20, 100),
                                             HardwareProfile(0.2, 0.92, 10, 90),
                                             NetworkProfile::normal(0.1, 0.02)};
    const McSummary first = monte_carlo_dcaq(scenario, 2000, 123);
    const McSummary second = monte_carlo_dcaq(scenario, 2000, 123);
    CHECK(first == second);
    CHECK(first.p5 <= first.p50);
    CHECK(first.p50 <= first.p95);

    const McSummary other_seed = monte_carlo_dcaq(scenario, 2000, 124);
    CHECK(other_seed.mean != first.mean);
}

TEST_CASE("hopeless truncated normal fails after the attempt cap") {
    Scenario scenario = dcaq::test::lan_scenario();
    scenario.environment = RemoteEnvironment{HardwareProfile(0.05, 0.9, 20, 100),
                                             HardwareProfile(0.2, 0.92, 10, 90),
                                             NetworkProfile::normal(-5.0, 1e-6)};
    CHECK_THROWS_AS(monte_carlo_dcaq(scenario, 1, 0), Error);
}

TEST_CASE("monte carlo rejects a nonpositive trial count") {
    CHECK_THROWS_AS(monte_carlo_dcaq(dcaq::test::lan_scenario(), 0, 1), ValidationError);
}
