#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dcaq/model.hpp"

// Empirical oracle, kept independent of the analytic engines:
//  - executes real searches over synthetic libraries and counts comparisons,
//  - replays the transfer pipeline by stepwise accumulation,
//  - Monte-Carlo-samples network rates to quantify the metric's spread.

namespace dcaq {

struct SearchOutcome {
    bool found = false;
    std::int64_t probes = 0;
};

// A concrete library instance: N unique keys laid out per the organization.
// Sorted and tree kinds keep keys in strict ascending order; the unsorted
// kind stores a seeded shuffle. The tree kind is a balanced routing tree
// with the keys at the leaves, so a search is one two-way comparison per
// internal level followed by a terminal equality check.
class SyntheticLibrary {
public:
    struct Node {
        std::uint64_t key = 0;  // routing key (max of left subtree); actual key at leaves
        std::unique_ptr<Node> left;
        std::unique_ptr<Node> right;
        bool leaf() const noexcept { return left == nullptr; }
    };

    Organization organization() const noexcept { return organization_; }
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(keys_.size()); }
    const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }

    // Worst-case probe depth of the tree, measured on the built structure
    // and floored at 1 (a single-leaf tree still costs one comparison).
    // Only defined for the balanced-tree kind.
    std::int64_t height() const;

    SyntheticLibrary(SyntheticLibrary&&) = default;
    SyntheticLibrary& operator=(SyntheticLibrary&&) = default;

private:
    SyntheticLibrary() = default;

    friend SyntheticLibrary build_library(Organization organization, std::int64_t n,
                                          std::uint64_t seed);
    friend SearchOutcome empirical_search(const SyntheticLibrary& library, std::uint64_t key);

    Organization organization_ = Organization::SortedSequentialList;
    std::vector<std::uint64_t> keys_;   // library order
    std::unique_ptr<Node> root_;        // tree kind only
    std::int64_t height_ = 0;           // tree kind only
};

// Deterministic library of n unique keys; the same (organization, n, seed)
// reproduces an identical structure.
SyntheticLibrary build_library(Organization organization, std::int64_t n, std::uint64_t seed);

// Performs the actual search and counts comparisons against library entries.
// One probe per range-halving or routing comparison; the terminal equality
// check is the probe only when no halving comparison happened (N = 1), which
// keeps the count at the at-least-one-comparison floor.
SearchOutcome empirical_search(const SyntheticLibrary& library, std::uint64_t key);

// Replays the transfer pipeline stage by stage, chunking payloads and
// accumulating onto a running clock. Shares no code with the access-time
// engine so agreement between the two is evidence, not tautology.
// network_rate_bpns is used only for remote environments.
double replay_transfer(const Scenario& scenario, double network_rate_bpns);

struct McSummary {
    std::int64_t trials = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
    double p5 = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
    std::uint64_t seed = 0;
    std::string generator;   // sampling algorithm, recorded for reproducibility
    bool degenerate = false; // no stochastic rate to sample but trials > 1

    bool operator==(const McSummary&) const = default;
};

// Samples the network rate per trial with a seeded generator, evaluates the
// metric per trial and summarizes. Identical (scenario, trials, seed) inputs
// reproduce identical summaries bit for bit. Trials use per-index derived
// seeds, so the trial order is deterministic.
McSummary monte_carlo_dcaq(const Scenario& scenario, std::int64_t trials, std::uint64_t seed);

}  // namespace dcaq
