#include "dcaq/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>

#include "dcaq/dcaq.hpp"

namespace dcaq {

namespace {

// splitmix64: the 64-bit seeded generator used for all simulator sampling.
// The algorithm name is recorded in McSummary::generator.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via the Marsaglia polar method.
    double next_normal() {
        while (true) {
            const double u = 2.0 * next_unit() - 1.0;
            const double v = 2.0 * next_unit() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) {
                return u * std::sqrt(-2.0 * std::log(s) / s);
            }
        }
    }
};

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t trial_seed(std::uint64_t seed, std::int64_t trial_index) {
    return SplitMix64(seed + kGolden * (static_cast<std::uint64_t>(trial_index) + 1)).next();
}

constexpr int kTruncationAttemptCap = 1'000'000;

double sample_rate(const NetworkProfile& network, SplitMix64& rng) {
    switch (network.kind()) {
        case RateKind::Fixed:
            return network.fixed_rate();
        case RateKind::Uniform: {
            const double lo = network.uniform_lo();
            const double hi = network.uniform_hi();
            return lo + (hi - lo) * rng.next_unit();
        }
        case RateKind::Normal: {
            // Truncated at > 0: resample, capped so a hopeless distribution
            // fails loudly instead of spinning.
            for (int attempt = 0; attempt < kTruncationAttemptCap; ++attempt) {
                const double rate =
                    network.normal_mean() + network.normal_stddev() * rng.next_normal();
                if (rate > 0.0) return rate;
            }
            throw Error("truncated normal rate: no positive sample within 1000000 attempts");
        }
    }
    throw Error("unreachable network rate kind");
}

std::vector<std::uint64_t> ascending_unique_keys(std::int64_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> keys;
    keys.reserve(static_cast<std::size_t>(n));
    std::uint64_t key = rng.next() % 1000;
    for (std::int64_t i = 0; i < n; ++i) {
        key += 1 + rng.next() % 997;  // strictly increasing, so unique by construction
        keys.push_back(key);
    }
    return keys;
}

std::unique_ptr<SyntheticLibrary::Node> build_tree(std::span<const std::uint64_t> keys) {
    auto node = std::make_unique<SyntheticLibrary::Node>();
    if (keys.size() == 1) {
        node->key = keys[0];
        return node;
    }
    const std::size_t left_count = (keys.size() + 1) / 2;
    node->key = keys[left_count - 1];  // max of the left half routes the descent
    node->left = build_tree(keys.first(left_count));
    node->right = build_tree(keys.subspan(left_count));
    return node;
}

std::int64_t max_probe_depth(const SyntheticLibrary::Node& node) {
    if (node.leaf()) return 0;
    return 1 + std::max(max_probe_depth(*node.left), max_probe_depth(*node.right));
}

// Chunked transfer: advances the clock one chunk at a time instead of one
// closed-form division, so the replay path exercises its own arithmetic.
constexpr std::int64_t kChunkBits = 4096;

void replay_transfer_stage(double& clock_ns, std::int64_t bits, double rate_bpns) {
    if (!std::isfinite(rate_bpns) || !(rate_bpns > 0.0)) {
        throw ValidationError("rate", "transfer rate must be a positive, finite value");
    }
    std::int64_t remaining = bits;
    while (remaining > 0) {
        const std::int64_t chunk = std::min(remaining, kChunkBits);
        clock_ns += static_cast<double>(chunk) / rate_bpns;
        remaining -= chunk;
    }
}

void replay_memory_search(double& clock_ns, const HardwareProfile& hw) {
    const double hr = hw.hit_ratio();
    clock_ns += hr * hw.cache_time_ns() + (1.0 - hr) * (hw.cache_time_ns() + hw.memory_time_ns());
}

}  // namespace

std::int64_t SyntheticLibrary::height() const {
    if (organization_ != Organization::BalancedBinaryTree) {
        throw Error("height is defined for balanced-tree libraries only");
    }
    return height_;
}

SyntheticLibrary build_library(Organization organization, std::int64_t n, std::uint64_t seed) {
    if (n < 1) {
        throw ValidationError("n", "must be a positive count (>= 1)");
    }
    SyntheticLibrary library;
    library.organization_ = organization;
    library.keys_ = ascending_unique_keys(n, seed);
    switch (organization) {
        case Organization::SortedSequentialList:
            break;
        case Organization::BalancedBinaryTree:
            library.root_ = build_tree(library.keys_);
            library.height_ = std::max<std::int64_t>(1, max_probe_depth(*library.root_));
            break;
        case Organization::UnsortedSequentialList: {
            SplitMix64 rng(seed ^ 0xD1B54A32D192ED03ULL);
            for (std::size_t i = library.keys_.size(); i > 1; --i) {
                std::swap(library.keys_[i - 1], library.keys_[rng.next() % i]);
            }
            break;
        }
    }
    return library;
}

SearchOutcome empirical_search(const SyntheticLibrary& library, std::uint64_t key) {
    const std::vector<std::uint64_t>& keys = library.keys_;
    switch (library.organization_) {
        case Organization::UnsortedSequentialList: {
            std::int64_t probes = 0;
            for (const std::uint64_t candidate : keys) {
                ++probes;
                if (candidate == key) return {true, probes};
            }
            return {false, probes};
        }
        case Organization::SortedSequentialList: {
            // Two-way bisection: the range halves on every comparison and the
            // surviving candidate is checked once at the end.
            std::int64_t probes = 0;
            std::size_t lo = 0;
            std::size_t hi = keys.size() - 1;
            while (lo < hi) {
                const std::size_t mid = lo + (hi - lo) / 2;
                ++probes;
                if (key <= keys[mid]) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            const bool found = keys[lo] == key;
            if (probes == 0) probes = 1;
            return {found, probes};
        }
        case Organization::BalancedBinaryTree: {
            std::int64_t probes = 0;
            const SyntheticLibrary::Node* node = library.root_.get();
            while (!node->leaf()) {
                ++probes;
                node = (key <= node->key) ? node->left.get() : node->right.get();
            }
            const bool found = node->key == key;
            if (probes == 0) probes = 1;
            return {found, probes};
        }
    }
    throw Error("unreachable library organization");
}

double replay_transfer(const Scenario& scenario, double network_rate_bpns) {
    const std::int64_t command_bits = scenario.command.bit_size();
    const std::int64_t component_bits = scenario.component.bit_size();
    double clock_ns = 0.0;
    if (const auto* local = std::get_if<LocalEnvironment>(&scenario.environment)) {
        replay_transfer_stage(clock_ns, command_bits, local->client.bus_rate());
        replay_memory_search(clock_ns, local->client);
        replay_transfer_stage(clock_ns, component_bits, local->client.bus_rate());
        return clock_ns;
    }
    const auto& remote = std::get<RemoteEnvironment>(scenario.environment);
    replay_transfer_stage(clock_ns, command_bits, remote.client.bus_rate());
    replay_transfer_stage(clock_ns, command_bits, network_rate_bpns);
    replay_memory_search(clock_ns, remote.server);
    replay_transfer_stage(clock_ns, component_bits, remote.server.bus_rate());
    replay_transfer_stage(clock_ns, component_bits, network_rate_bpns);
    replay_transfer_stage(clock_ns, component_bits, remote.client.bus_rate());
    return clock_ns;
}

McSummary monte_carlo_dcaq(const Scenario& scenario, std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw ValidationError("trials", "must be a positive count (>= 1)");
    }
    const auto* remote = std::get_if<RemoteEnvironment>(&scenario.environment);
    const bool stochastic = remote != nullptr && remote->network.is_stochastic();

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(trials));
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < trials; ++i) {
        EvaluateOptions options;
        if (remote != nullptr) {
            SplitMix64 rng(trial_seed(seed, i));
            options.network_rate_sample = sample_rate(remote->network, rng);
        }
        const double value = evaluate(scenario, options).dcaq;
        values.push_back(value);
        const double delta = value - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (value - mean);
    }

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const auto nearest_rank = [&](double q) {
        const auto n = static_cast<double>(sorted.size());
        const auto index = static_cast<std::size_t>(std::ceil(q * n));
        return sorted[std::min(sorted.size() - 1, index == 0 ? 0 : index - 1)];
    };

    McSummary summary;
    summary.trials = trials;
    summary.mean = mean;
    summary.stddev = trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1)) : 0.0;
    summary.min = sorted.front();
    summary.max = sorted.back();
    summary.p5 = nearest_rank(0.05);
    summary.p50 = nearest_rank(0.50);
    summary.p95 = nearest_rank(0.95);
    summary.seed = seed;
    summary.generator = "splitmix64";
    summary.degenerate = !stochastic && trials > 1;
    return summary;
}

}  // namespace dcaq
